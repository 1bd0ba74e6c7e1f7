"""Registry of the available power sum engines."""

from ._engine import SumEngine
from ._loop_engine import LoopEngine
from ._numpy_engine import NumpyEngine
from ._paired_engine import PairedEngine


class EngineRegistry:
    """
    Name-to-class lookup for SumEngine implementations.

    Lets the command line and the scan runner pick an engine by name.
    """

    def __init__(self) -> None:
        """Initialize an empty engine registry."""
        self._engines: dict[str, type[SumEngine]] = {}
        self._default_engine: str | None = None

    def register(
        self, name: str, engine_class: type[SumEngine], *, is_default: bool = False
    ) -> None:
        """
        Register an engine implementation.

        Args:
            name: Unique identifier for the engine (e.g., "loop", "numpy")
            engine_class: The engine class (must inherit from SumEngine)
            is_default: If True, sets this engine as the default

        Raises:
            ValueError: If the name is taken or engine_class is not a SumEngine
        """
        if name in self._engines:
            raise ValueError(f"Engine '{name}' is already registered")

        if not (isinstance(engine_class, type) and issubclass(engine_class, SumEngine)):
            raise ValueError(f"Engine class must inherit from SumEngine, got {engine_class}")

        self._engines[name] = engine_class

        if is_default or self._default_engine is None:
            self._default_engine = name

    def get(self, name: str) -> type[SumEngine]:
        """
        Retrieve an engine by name.

        Raises:
            KeyError: If no engine with the given name is registered
        """
        if name not in self._engines:
            raise KeyError(f"No engine registered with name '{name}'")
        return self._engines[name]

    def get_default_name(self) -> str | None:
        """Name of the default engine, None while the registry is empty."""
        return self._default_engine

    def list_engines(self) -> list[str]:
        """Registered engine names in registration order."""
        return list(self._engines.keys())


def default_registry() -> EngineRegistry:
    """Registry holding every built-in engine, with "loop" as the default."""
    registry = EngineRegistry()
    registry.register("loop", LoopEngine, is_default=True)
    registry.register("paired", PairedEngine)
    registry.register("numpy", NumpyEngine)
    return registry
