from .LoaderTest import LoaderTest
