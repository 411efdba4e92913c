"""Sequence comparison by per-symbol channel correlation."""

from ._core import (
    DISPLACEMENT_CONVENTION,
    MAX_ALPHABET,
    AlphabetSpec,
    ChannelCorrelation,
    ChannelSet,
    CoincidenceSignal,
    Deletion,
    Engine,
    Error,
    GroundTruth,
    NoiseModel,
    NormalizedSequence,
    NormalizeMode,
    Peak,
    PlantedPair,
    PlantedSpec,
    RealChannelSet,
    RealSignal,
    RectKernel,
    Sequence,
    coincidence,
    compare,
    correlate_channel,
    decompose,
    detect_peaks,
    engine_name,
    expected_floor,
    gen_planted,
    gen_uniform,
    make_planted_spec,
    normalize,
    numeric_xcorr,
    overlap,
    peak_to_background,
    rect_kernel,
    smooth_channels,
    smoothed_coincidence,
    smoothed_floor,
)

__all__ = [
    "DISPLACEMENT_CONVENTION",
    "MAX_ALPHABET",
    "AlphabetSpec",
    "ChannelCorrelation",
    "ChannelSet",
    "CoincidenceSignal",
    "Deletion",
    "Engine",
    "Error",
    "GroundTruth",
    "NoiseModel",
    "NormalizedSequence",
    "NormalizeMode",
    "Peak",
    "PlantedPair",
    "PlantedSpec",
    "RealChannelSet",
    "RealSignal",
    "RectKernel",
    "Sequence",
    "coincidence",
    "compare",
    "correlate_channel",
    "decompose",
    "detect_peaks",
    "engine_name",
    "expected_floor",
    "gen_planted",
    "gen_uniform",
    "make_planted_spec",
    "normalize",
    "numeric_xcorr",
    "overlap",
    "peak_to_background",
    "rect_kernel",
    "smooth_channels",
    "smoothed_coincidence",
    "smoothed_floor",
]

__version__ = "1.0.0"
