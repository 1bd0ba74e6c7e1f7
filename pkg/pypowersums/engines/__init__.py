from ._engine import SumEngine
from ._loop_engine import LoopEngine
from ._numpy_engine import NumpyEngine
from ._paired_engine import PairedEngine
from ._engine_registry import EngineRegistry, default_registry

__all__ = [
    "SumEngine",
    "LoopEngine",
    "NumpyEngine",
    "PairedEngine",
    "EngineRegistry",
    "default_registry",
]
