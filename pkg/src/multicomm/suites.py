"""Named verification suites.

A suite is a list of tasks; a task is a registered check name plus keyword
arguments, so it can be shipped to a worker process.  Reports come back in
task order whatever the number of workers.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import checks, commutation, degeneration, rmatrix
from .report import ERROR, SampleRecord, VerificationReport
from .scalars import SamplePlan

SUITES = ("rmatrix", "weightfn", "grid", "commutation", "bethe-gt", "degeneration", "golden")

DEFAULT_CAPS = {
    "max_layer": 2,  # parameters per layer in psi = W
    "max_L": 4,  # length of color tuples in psi = W
    "max_n": 4,  # domain-wall size and GT relation length
    "max_part": 2,  # part size in specialization and GT checks
    "size_vectors": 200,  # random inputs for the exponent identity
}


class ConfigError(ValueError):
    pass


@dataclass
class SuiteConfig:
    seed: int = 0
    samples: int = 5
    flavor: str | None = None
    N: int | None = None
    sizes: tuple | None = None
    n: int | None = None
    caps: dict = field(default_factory=lambda: dict(DEFAULT_CAPS))
    jobs: int = 1

    def plan(self, count=None):
        return SamplePlan(seed=self.seed, count=self.samples if count is None else count)


def parse_caps(text):
    """'max_n=3,max_part=2' -> caps dict on top of the defaults."""
    caps = dict(DEFAULT_CAPS)
    if not text:
        return caps
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, val = item.partition("=")
        key = key.strip()
        if not sep or key not in DEFAULT_CAPS:
            raise ConfigError(f"unknown cap {item!r}; known: {', '.join(sorted(DEFAULT_CAPS))}")
        try:
            caps[key] = int(val)
        except ValueError as exc:
            raise ConfigError(f"cap {key} needs an integer") from exc
        if caps[key] < 1:
            raise ConfigError(f"cap {key} must be positive")
    return caps


# ---------------------------------------------------------------------------
# task registry


def _exponent_batch(seed, count):
    rep = VerificationReport(identity="exponent-identity", anchor="degeneration/exponents", seed=seed,
                             instance={"size_vectors": count})
    for index, sizes in enumerate(degeneration.random_size_vectors(seed, count)):
        ok = degeneration.exponent_identity(sizes).passed
        rep.samples.append(SampleRecord(index=index, attempt=0, equal=ok))
        if not ok and rep.counterexample is None:
            rep.counterexample = {"sizes": ",".join(map(str, sizes))}
    return rep.finish()


def _coefficient_routes(flavor, sizes, plan):
    return commutation.verify_coefficient_routes(flavor, sizes, plan)


REGISTRY = {
    "yang_baxter": rmatrix.check_yang_baxter,
    "unitarity": rmatrix.check_unitarity,
    "equal_argument": rmatrix.check_equal_argument,
    "flavor_duality": rmatrix.check_flavor_duality,
    "psi_equals_w": checks.check_psi_equals_w,
    "h_equals_k": checks.check_h_equals_k,
    "grid_k_factor": checks.check_grid_k_factor,
    "grid_f_factor": checks.check_grid_f_factor,
    "multiple_commutation": commutation.verify_multiple_commutation,
    "coefficient_routes": _coefficient_routes,
    "b_equals_bhat": checks.check_b_equals_bhat,
    "psi_closed_forms": checks.check_psi_closed_forms,
    "show_relation": checks.check_show_relation,
    "relation_gz": checks.check_relation_gz,
    "qdet": checks.check_qdet_diagonalization,
    "minor_commutativity": checks.check_minor_commutativity,
    "singular_ladder": checks.check_singular_ladder,
    "gt_independence": checks.check_gt_independence,
    "degenerate_r": degeneration.degenerate_r_check,
    "exponent_batch": _exponent_batch,
    "golden": checks.check_golden,
}


def _flavors(cfg, allowed):
    if cfg.flavor is None:
        return list(allowed)
    return [cfg.flavor] if cfg.flavor in allowed else []


def _Ns(cfg, default):
    return [cfg.N] if cfg.N is not None else list(default)


def _tasks_rmatrix(cfg):
    out = []
    for fl in _flavors(cfg, ("trigA", "trigB", "rational")):
        for N in _Ns(cfg, (2, 3, 4)):
            for name in ("yang_baxter", "unitarity", "equal_argument"):
                out.append((name, dict(flavor=fl, N=N, plan=cfg.plan())))
    if cfg.flavor in (None, "trigB"):
        for N in _Ns(cfg, (2, 3, 4)):
            out.append(("flavor_duality", dict(N=N, plan=cfg.plan(100))))
    return out


def _tasks_weightfn(cfg):
    out = []
    caps = cfg.caps
    for fl in _flavors(cfg, ("trigA", "rational")):
        for N in _Ns(cfg, (2, 3)):
            for L in range(1, caps["max_L"] + 1):
                out.append(("psi_equals_w", dict(flavor=fl, N=N, L=L, plan=cfg.plan(), max_layer=caps["max_layer"])))
        for n in range(1, caps["max_n"] + 1):
            out.append(("h_equals_k", dict(flavor=fl, n=n, plan=cfg.plan())))
    return out


def _tasks_grid(cfg):
    out = []
    default = [(1, 1), (2, 1), (1, 2), (1, 1, 1), (2, 1, 1), (1, 1, 2)]
    size_list = [tuple(cfg.sizes)] if cfg.sizes else default
    if cfg.N is not None:
        size_list = [s for s in size_list if len(s) == cfg.N]
    for fl in _flavors(cfg, ("trigA", "rational")):
        for sizes in size_list:
            out.append(("grid_k_factor", dict(flavor=fl, sizes=sizes, plan=cfg.plan())))
            out.append(("grid_f_factor", dict(flavor=fl, sizes=sizes, plan=cfg.plan())))
    return out


COMMUTATION_SIZES = [(1, 1), (2, 1), (2, 2), (1, 1, 1), (2, 1, 1)]


def _tasks_commutation(cfg):
    out = []
    size_list = [tuple(cfg.sizes)] if cfg.sizes else COMMUTATION_SIZES
    if cfg.N is not None:
        size_list = [s for s in size_list if len(s) == cfg.N]
    for fl in _flavors(cfg, ("trigA", "rational")):
        for sizes in size_list:
            total = sum(sizes)
            lengths = [cfg.n] if cfg.n is not None else [total, total + 1]
            for n in lengths:
                out.append(("multiple_commutation", dict(flavor=fl, sizes=sizes, plan=cfg.plan(), n_sites=n)))
            if cfg.n is None:
                out.append(("multiple_commutation", dict(flavor=fl, sizes=sizes, plan=cfg.plan(), xi_mode="union")))
            if len(sizes) == 2:
                out.append(("multiple_commutation", dict(flavor=fl, sizes=sizes, plan=cfg.plan(), route="ik")))
            if len(sizes) >= 3:
                out.append(("coefficient_routes", dict(flavor=fl, sizes=sizes, plan=cfg.plan())))
    return out


def _tasks_bethe(cfg):
    out = []
    caps = cfg.caps
    mp = caps["max_part"]
    ns = [cfg.n] if cfg.n is not None else [n for n in (3, 4) if n <= caps["max_n"]]
    if cfg.flavor in (None, "trigB"):
        for sizes, n in [((1, 1), 2), ((2, 1), 2), ((1, 2), 2), ((2, 2), 2), ((2, 2), 3)]:
            if max(sizes) <= mp:
                out.append(("b_equals_bhat", dict(N=3, sizes=sizes, n=n, plan=cfg.plan())))
        for n in ns:
            out.append(("psi_closed_forms", dict(N=3, n=n, plan=cfg.plan(), max_part=mp)))
    for fl in _flavors(cfg, ("trigB", "rational")):
        for n in ns:
            out.append(("show_relation", dict(flavor=fl, N=3, n=n, plan=cfg.plan(), max_part=mp)))
    for fl in _flavors(cfg, ("trigA", "rational")):
        for n in ns:
            out.append(("relation_gz", dict(flavor=fl, N=3, n=n, plan=cfg.plan(), max_part=mp)))
        out.append(("gt_independence", dict(flavor=fl, N=3, n=3, plan=cfg.plan())))
    if cfg.flavor in (None, "trigA"):
        for N in _Ns(cfg, (2, 3)):
            for n in range(1, 4):
                out.append(("qdet", dict(N=N, n=n, plan=cfg.plan())))
                out.append(("singular_ladder", dict(N=N, n=n, plan=cfg.plan())))
        out.append(("minor_commutativity", dict(N=3, n=2, plan=cfg.plan(1), states=20)))
    return out


def _tasks_degeneration(cfg):
    out = [("degenerate_r", dict(N=N, order=2, plan=cfg.plan())) for N in _Ns(cfg, (2, 3, 4))]
    out.append(("exponent_batch", dict(seed=cfg.seed, count=cfg.caps["size_vectors"])))
    return out


def _tasks_golden(cfg):
    return [("golden", dict(plan=cfg.plan(6)))]


TASKS = {
    "rmatrix": _tasks_rmatrix,
    "weightfn": _tasks_weightfn,
    "grid": _tasks_grid,
    "commutation": _tasks_commutation,
    "bethe-gt": _tasks_bethe,
    "degeneration": _tasks_degeneration,
    "golden": _tasks_golden,
}


def suite_tasks(name, cfg: SuiteConfig):
    if name == "all":
        return [t for s in SUITES for t in TASKS[s](cfg)]
    if name not in TASKS:
        raise ConfigError(f"unknown suite {name!r}; known: {', '.join(SUITES + ('all',))}")
    return TASKS[name](cfg)


def run_task(task):
    """Run one task; always returns a list of reports with durations filled in."""
    name, kwargs = task
    start = time.perf_counter()
    try:
        res = REGISTRY[name](**kwargs)
    except Exception as exc:  # reported, not raised: one broken check must not hide the rest
        plan = kwargs.get("plan")
        res = VerificationReport(identity=name, anchor="error", seed=plan.seed if plan else 0, status=ERROR,
                                 note=f"{type(exc).__name__}: {exc}")
    reports = res if isinstance(res, list) else [res]
    elapsed = time.perf_counter() - start
    for r in reports:
        r.duration = elapsed / len(reports)
    return reports


def run_suite(name, cfg: SuiteConfig | None = None):
    """All reports of a suite, in deterministic task order."""
    cfg = cfg or SuiteConfig()
    if cfg.samples < 1:
        raise ConfigError("samples must be positive")
    if cfg.jobs < 1:
        raise ConfigError("jobs must be positive")
    tasks = suite_tasks(name, cfg)
    if cfg.jobs == 1 or len(tasks) < 2:
        chunks = [run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(run_task, tasks))
    return [r for chunk in chunks for r in chunk]
