import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from agents.types import Span, SpatialFrame

_TOKEN_RE = re.compile(r"[a-z0-9]+")

# Determiners and quantifiers never count as a shared head.
_NON_HEADS = frozenset({"the", "a", "an", "of", "this", "that", "these", "those", "some", "several"})


def head_token(span: Span) -> str:
    tokens = [t for t in _TOKEN_RE.findall(span.text.lower()) if t not in _NON_HEADS]
    return tokens[-1] if tokens else ""


def spans_link(ground: Span, figure: Span) -> bool:
    """A Ground links to the next Figure when they share characters or a head token."""
    if ground.overlaps(figure):
        return True
    head = head_token(ground)
    return bool(head) and head == head_token(figure)


@dataclass(frozen=True)
class FrameChain:
    """
    Frames joined through a shared Ground/Figure element.

    The chain's effective Figure and Diagnosis come from its first frame and its
    effective Ground from its last frame.
    """

    frames: Tuple[SpatialFrame, ...]

    @property
    def merged_figure(self) -> List[Span]:
        return self.frames[0].figures

    @property
    def merged_diagnosis(self) -> List[Span]:
        return self.frames[0].diagnoses

    @property
    def merged_ground(self) -> List[Span]:
        return self.frames[-1].grounds

    def __len__(self):
        return len(self.frames)


def _joins(previous: SpatialFrame, following: SpatialFrame) -> bool:
    return any(
        spans_link(ground, figure)
        for ground in previous.grounds
        for figure in following.figures
    )


def chain_frames(frames: Sequence[SpatialFrame]) -> List[FrameChain]:
    """
    Greedy left-to-right chaining of one sentence's frames.

    Args:
        frames: frames of one sentence in trigger order

    Returns:
        Chains partitioning `frames`, in order
    """
    chains: List[List[SpatialFrame]] = []
    for frame in frames:
        if chains and _joins(chains[-1][-1], frame):
            chains[-1].append(frame)
        else:
            chains.append([frame])
    return [FrameChain(tuple(chain)) for chain in chains]


class FrameChainAgent:
    """
    Groups the frames of each sentence into chains so that a finding reaches its
    final location through intermediate elements ("infarction in the lateral
    aspect of right cerebellum").
    """

    def chain(self, sentences_frames: Sequence[Sequence[SpatialFrame]]) -> List[FrameChain]:
        chains: List[FrameChain] = []
        for frames in sentences_frames:
            chains.extend(chain_frames(frames))
        return chains
