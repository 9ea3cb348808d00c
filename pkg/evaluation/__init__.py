from .scorer import CoarseStage, EvalResult, EvaluationError, Variant, evaluate, evaluate_all, project
