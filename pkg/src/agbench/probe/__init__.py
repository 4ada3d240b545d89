from .maps import average_activation_map, end_stopping_score, export_maps, per_filter_maps
from .ops import batch_norm, conv2d, max_pool, relu
from .stem import STEM_TAPS, run_stem
from .weights import WeightBundle, load_weight_bundle, save_weight_bundle

__all__ = [
    "conv2d",
    "batch_norm",
    "relu",
    "max_pool",
    "WeightBundle",
    "load_weight_bundle",
    "save_weight_bundle",
    "run_stem",
    "STEM_TAPS",
    "average_activation_map",
    "per_filter_maps",
    "end_stopping_score",
    "export_maps",
]
