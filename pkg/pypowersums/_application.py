import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from .application import ScanRunner, emit_report
from .engines import EngineRegistry, SumEngine, default_registry
from .sums import PowerSumQuery, exact_classical_ratio, exact_ratio

logger = logging.getLogger(__name__)

_DEFAULT_FORMAT: str = "json"

# subcommand -> (scan kind, default k range, default n range)
_SCAN_COMMANDS: dict[str, tuple[str, tuple[int, int], tuple[int, int]]] = {
    "verify-theorem": ("theorem", (1, 200), (2, 2000)),
    "check-lemma1": ("lemma1", (2, 100), (1, 1000)),
    "check-lemma2": ("lemma2", (2, 100), (2, 1000)),
    "scan-kellner": ("kellner", (1, 100), (3, 500)),
    "check-identities": ("identities", (2, 50), (3, 501)),
}

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class Application:
    def __init__(
        self,
        engine_registry: EngineRegistry | None = None,
        runner_factory: Callable[[int | None], ScanRunner] | None = None,
    ) -> None:
        """
        Initialize the Application.

        Args:
            engine_registry: Optional custom engine registry
            runner_factory: Optional factory building a ScanRunner from a worker count
        """
        if engine_registry is None:
            engine_registry = default_registry()
        self._engine_registry = engine_registry

        if runner_factory is None:
            runner_factory = ScanRunner
        self._runner_factory = runner_factory

        self._parser = self._build_parser()

    def get_engine_registry(self) -> EngineRegistry:
        """Get the engine registry."""
        return self._engine_registry

    def _build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="pypowersums",
            description="Exact power sums, their congruences and integer ratio verification.",
        )
        parser.add_argument(
            "-v", "--verbose", action="store_true", help="log progress to standard error"
        )
        commands = parser.add_subparsers(dest="command", required=True)

        engine_options = argparse.ArgumentParser(add_help=False)
        engine_options.add_argument(
            "--engine",
            choices=self._engine_registry.list_engines(),
            default=self._engine_registry.get_default_name(),
            help="summation engine",
        )

        compute = commands.add_parser(
            "compute", parents=[engine_options], help="a single A_k(n) or S_k(n)"
        )
        compute.add_argument("-k", type=int, required=True)
        compute.add_argument("-n", type=int, required=True)
        compute.add_argument("--classic", action="store_true", help="S_k(n) instead of A_k(n)")
        compute.add_argument("--mod", type=int, help="reduce modulo this positive integer")

        ratio = commands.add_parser(
            "ratio", parents=[engine_options], help="A_k(n+1)/A_k(n) or S_k(n+1)/S_k(n)"
        )
        ratio.add_argument("-k", type=int, required=True)
        ratio.add_argument("-n", type=int, required=True)
        ratio.add_argument("--classic", action="store_true", help="S_k(n+1)/S_k(n)")

        for name, (kind, k_range, n_range) in _SCAN_COMMANDS.items():
            scan = commands.add_parser(name, parents=[engine_options], help=f"{kind} grid scan")
            scan.add_argument("--k-min", type=int, default=k_range[0])
            scan.add_argument("--k-max", type=int, default=k_range[1])
            scan.add_argument("--n-min", type=int, default=n_range[0])
            scan.add_argument("--n-max", type=int, default=n_range[1])
            scan.add_argument(
                "--jobs", type=int, help="worker processes (default: PYPOWERSUMS_JOBS or CPU count)"
            )
            scan.add_argument("--format", choices=("json", "csv"), default=_DEFAULT_FORMAT)
            scan.add_argument("--out", type=Path, help="report file (default: standard output)")
            scan.set_defaults(scan_kind=kind)
        return parser

    def run(self, argv: Sequence[str] | None = None) -> int:
        """
        Parse arguments and run one subcommand.

        Returns:
            0 when the value was computed or every property held, 1 when a
            violation or counterexample was found, 2 on a usage error
        """
        try:
            args = self._parser.parse_args(argv)
        except SystemExit as exc:
            return EXIT_OK if exc.code == 0 else EXIT_USAGE

        logging.basicConfig(
            level=logging.INFO if args.verbose else logging.WARNING,
            stream=sys.stderr,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        )

        try:
            engine = self._engine_registry.get(args.engine)
            if args.command == "compute":
                return self._compute(args, engine)
            if args.command == "ratio":
                return self._ratio(args, engine)
            return self._scan(args, engine)
        except (ValueError, KeyError, OSError) as exc:
            print(f"pypowersums: error: {exc}", file=sys.stderr)
            return EXIT_USAGE

    def _compute(self, args: argparse.Namespace, engine: type[SumEngine]) -> int:
        q = PowerSumQuery(args.k, args.n)
        if args.mod is not None:
            if args.mod < 1:
                raise ValueError(f"Modulus must be positive, got {args.mod}.")
            if args.classic:
                value = engine.power_sum_mod(q.k, q.n, args.mod)
            else:
                value = engine.alternating_sum_mod(q.k, q.n, args.mod)
        elif args.classic:
            value = engine.power_sum(q.k, q.n)
        else:
            value = engine.alternating_sum(q.k, q.n)
        print(value)
        return EXIT_OK

    def _ratio(self, args: argparse.Namespace, engine: type[SumEngine]) -> int:
        if args.classic:
            value = exact_classical_ratio(args.k, args.n, engine)
        else:
            value = exact_ratio(args.k, args.n, engine)
        print(f"{value.numerator}/{value.denominator}")
        return EXIT_OK

    def _scan(self, args: argparse.Namespace, engine: type[SumEngine]) -> int:
        runner = self._runner_factory(args.jobs)
        report = runner.run(
            args.scan_kind, (args.k_min, args.k_max), (args.n_min, args.n_max), engine
        )
        emit_report(report, args.format, args.out)
        if not report.passed:
            logger.warning(
                "%d violation(s) in the %s scan", len(report.violations), report.scan_kind
            )
            return EXIT_VIOLATION
        return EXIT_OK
