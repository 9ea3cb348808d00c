from .agent import FrameChain, FrameChainAgent, chain_frames, head_token, spans_link
