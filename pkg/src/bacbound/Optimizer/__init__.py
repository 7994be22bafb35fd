from .OptimizerConfig import OptimizerConfig, OptimizerError, OptimizerConfigError
from .ScalarOptimizer import ScalarOptimizer, ScalarOptimizerEvaluationError, scalarMaximize, scalarMinimize
