class BacBoundError(Exception):
    """
    Base exception in bacbound.

    This exception serves as the base class for all errors raised
    within bacbound.
    """
