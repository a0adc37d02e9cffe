"""
Run configuration assembled from parsed command-line arguments.
"""

from dataclasses import dataclass

from core.errors import ConfigurationError
from core.limits import DEFAULT_MAX_MU, DEFAULT_MAX_POSET, DEFAULT_MAX_WORLDS

OUTPUT_FORMATS = ("human", "machine")


@dataclass(frozen=True)
class Caps:
    """Resource caps; every cap must be positive."""

    max_mu: int = DEFAULT_MAX_MU
    max_poset: int = DEFAULT_MAX_POSET
    max_worlds: int = DEFAULT_MAX_WORLDS

    def __post_init__(self):
        for name in ("max_mu", "max_poset", "max_worlds"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                raise ConfigurationError(f"{name} must be a positive integer, got {value!r}", name)


@dataclass(frozen=True)
class RunConfig:
    """
    Attributes:
        command (tuple): Command group and subcommand, e.g. ("mv", "check")
        inputs (tuple): Input file paths named on the command line
        caps (Caps): Resource caps
        output_format (str): "human" or "machine"
        seed (int): Seed for sampled suites
        plot (str or None): Figure output path
    """

    command: tuple
    inputs: tuple = ()
    caps: Caps = Caps()
    output_format: str = "human"
    seed: int = 0
    plot: str = None

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigurationError(f"unknown output format {self.output_format!r}", "format")
        if self.seed < 0:
            raise ConfigurationError("seed must be a natural number", "seed")

    @classmethod
    def from_args(cls, args):
        inputs = tuple(
            getattr(args, name)
            for name in ("file", "hyp", "config")
            if getattr(args, name, None) is not None
        )
        return cls(
            command=(args.group, args.action),
            inputs=inputs,
            caps=Caps(args.max_mu, args.max_poset, args.max_worlds),
            output_format=args.format,
            seed=args.seed,
            plot=getattr(args, "plot", None),
        )

    @property
    def name(self):
        return " ".join(self.command)
