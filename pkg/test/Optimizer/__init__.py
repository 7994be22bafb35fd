from .ScalarOptimizerTest import ScalarOptimizerTest
