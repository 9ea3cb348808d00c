from .agent import StageReasoningAgent, infer_stage
