"""Flat key = value run configurations.

One assignment per line, ``#`` starts a comment, blank lines ignored.
Numeric values may be constant expressions (``4/9``, ``1/e``) so parameter
files can state exact data.  Keys:

    alpha, beta, gamma          problem orders and coupling (required)
    f                           forcing expression over t, x, dx
    sigma_bound, a1, a2,
    tau1, tau2                  growth data (all five or none)
    w                           Lipschitz constant
    forcing_power_at_zero       declared power blow-up of f at t = 0
    n_panels, tol, max_iter     solver controls (defaults 256, 1e-8, 200)
    solution_csv, convergence_csv, report_txt   output paths
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from importlib import resources
from pathlib import Path

from .analysis import GrowthSpec, LipschitzSpec
from .errors import ConfigError, ExpressionError
from .expressions import compile_forcing, evaluate_scalar
from .kernels import OrderParams
from .solver import ProblemSpec

__all__ = ["RunConfig", "parse_config", "load_config", "build_problem",
           "bundled_config_path", "example_problem"]

_GROWTH_KEYS = ("sigma_bound", "a1", "a2", "tau1", "tau2")


@dataclass
class RunConfig:
    alpha: float = None
    beta: float = None
    gamma: float = None
    f: str = None
    sigma_bound: float = None
    a1: float = None
    a2: float = None
    tau1: float = None
    tau2: float = None
    w: float = None
    forcing_power_at_zero: float = None
    n_panels: int = 256
    tol: float = 1e-8
    max_iter: int = 200
    solution_csv: str = "solution.csv"
    convergence_csv: str = "convergence.csv"
    report_txt: str = "report.txt"


_FLOAT_KEYS = {"alpha", "beta", "gamma", "sigma_bound", "a1", "a2", "tau1", "tau2",
               "w", "tol", "forcing_power_at_zero"}
_INT_KEYS = {"n_panels", "max_iter"}
_STR_KEYS = {"f", "solution_csv", "convergence_csv", "report_txt"}


def parse_config(text: str) -> RunConfig:
    cfg = RunConfig()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("expected 'key = value'", line=lineno,
                              column=len(raw) - len(raw.lstrip()) + 1)
        key, value = (part.strip() for part in line.split("=", 1))
        if key in _STR_KEYS:
            if not value:
                raise ConfigError("empty value for %r" % key, line=lineno)
            setattr(cfg, key, value)
        elif key in _FLOAT_KEYS or key in _INT_KEYS:
            try:
                num = evaluate_scalar(value)
            except ExpressionError as exc:
                raise ConfigError("bad numeric value for %r: %s" % (key, exc),
                                  line=lineno, column=exc.column) from exc
            if key in _INT_KEYS:
                if num != int(num):
                    raise ConfigError("%r must be an integer" % key, line=lineno)
                num = int(num)
            setattr(cfg, key, num)
        else:
            raise ConfigError("unknown key %r" % key, line=lineno, column=1)
    for required in ("alpha", "beta", "gamma"):
        if getattr(cfg, required) is None:
            raise ConfigError("missing required key %r" % required)
    given = [k for k in _GROWTH_KEYS if getattr(cfg, k) is not None]
    if given and len(given) != len(_GROWTH_KEYS):
        raise ConfigError("growth data needs all of %s (got only %s)"
                          % (", ".join(_GROWTH_KEYS), ", ".join(given)))
    return cfg


def load_config(path) -> RunConfig:
    return parse_config(Path(path).read_text())


def resolve_config_path(name) -> Path:
    """Use the file if it exists, else fall back to a bundled config."""
    path = Path(name)
    if path.exists():
        return path
    bundled = bundled_config_path(path.name)
    if bundled is not None:
        return bundled
    raise ConfigError("config file %r not found (and no bundled config matches)" % str(name))


def bundled_config_path(name: str) -> Path | None:
    candidate = resources.files("fraclangevin").joinpath("data", name)
    if candidate.is_file():
        return Path(str(candidate))
    return None


def growth_spec(cfg: RunConfig) -> GrowthSpec | None:
    if cfg.sigma_bound is None:
        return None
    return GrowthSpec(sigma_bound=cfg.sigma_bound, a1=cfg.a1, a2=cfg.a2,
                      tau1=cfg.tau1, tau2=cfg.tau2)


def lipschitz_spec(cfg: RunConfig) -> LipschitzSpec | None:
    return None if cfg.w is None else LipschitzSpec(w=cfg.w)


def build_problem(cfg: RunConfig) -> ProblemSpec:
    if cfg.f is None:
        raise ConfigError("missing required key 'f' (the forcing expression)")
    return ProblemSpec(
        orders=OrderParams(cfg.alpha, cfg.beta, cfg.gamma),
        f=compile_forcing(cfg.f),
        growth=growth_spec(cfg),
        lipschitz=lipschitz_spec(cfg),
        forcing_power_at_zero=cfg.forcing_power_at_zero,
    )


def example_problem() -> ProblemSpec:
    """The bundled sublinear benchmark problem, ready to solve."""
    return build_problem(load_config(bundled_config_path("example1.cfg")))
