"""Batch verification sweeps, counterexample search, and reduction adjudication.

Sweeps enumerate (theorem, family, interval, s, m, q) combinations in a fixed
nested order, certify each instance once (cached), and collect findings without
aborting.  Reports are written with a stable field order and 15-significant-
digit float formatting, so identical configurations produce byte-identical
JSON/CSV files.
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import bounds
from .bounds import (
    GRADIENT_THEOREMS,
    TOL_ACCEPT,
    CoefficientSet,
    Interval,
    VerificationRecord,
    coeff_C,
    coeff_lambda,
    coeff_mu,
    coeff_nu,
    coeff_rho,
    kernel_oracle_identities,
)
from .errors import CertificationError, DomainError, ParameterError
from .functions import FunctionSpec, SMParams

__all__ = [
    "SCHEMA_VERSION",
    "SweepConfig",
    "Finding",
    "SweepResult",
    "default_sweep_config",
    "make_function",
    "run_sweep",
    "search_counterexample",
    "check_reductions",
    "build_adjudication_report",
    "write_report_json",
    "write_report_csv",
    "render_report_json",
    "render_report_csv",
]

SCHEMA_VERSION = 1

ALL_THEOREMS = ("HH", "HarmHH", "II1", *GRADIENT_THEOREMS)

# Domain cushion around the certification window [m*a, b/m]; combined points
# touch the window edges exactly, so the declared domain must extend past them.
_DOMAIN_PAD = 1e-6


@dataclass(frozen=True)
class Finding:
    """One adjudicated anomaly: a bound violation, a printed-form deviation,
    a reduction mismatch, or an aggregated per-instance error."""

    kind: str
    severity: float
    description: str
    payload: dict

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "severity": self.severity,
            "description": self.description,
            "payload": self.payload,
        }


@dataclass(frozen=True)
class SweepConfig:
    theorems: tuple[str, ...]
    families: tuple[dict, ...]
    a_values: tuple[float, ...]
    ratios: tuple[float, ...]
    s_grid: tuple[float, ...]
    m_grid: tuple[float, ...]
    q_grid: tuple[float, ...]
    grid: int = 48
    seed: int = 0

    def __post_init__(self) -> None:
        for t in self.theorems:
            if t not in ALL_THEOREMS:
                raise ParameterError(f"unknown theorem {t!r}; one of {ALL_THEOREMS}")
        for v in self.ratios:
            if v <= 1.0:
                raise ParameterError(f"interval ratios must exceed 1, got {v}")
        for v in self.a_values:
            if v <= 0.0:
                raise ParameterError(f"a values must be positive, got {v}")
        for s in self.s_grid:
            if not 0.0 <= s <= 1.0:
                raise ParameterError(f"s grid values must lie in [0, 1], got {s}")
        for m in self.m_grid:
            if not 0.0 < m <= 1.0:
                raise ParameterError(f"m grid values must lie in (0, 1], got {m}")
        for q in self.q_grid:
            if q < 1.0:
                raise ParameterError(f"q grid values must be >= 1, got {q}")
        if self.grid < 8:
            raise ParameterError(f"certification grid density must be >= 8, got {self.grid}")
        for fam in self.families:
            # instantiating on a probe interval surfaces bad names/arity at
            # config-parse time instead of mid-sweep
            make_function(fam, 1.0, Interval(1.0, 2.0))

    def to_dict(self) -> dict:
        return {
            "theorems": list(self.theorems),
            "families": [dict(d) for d in self.families],
            "a_values": list(self.a_values),
            "ratios": list(self.ratios),
            "s_grid": list(self.s_grid),
            "m_grid": list(self.m_grid),
            "q_grid": list(self.q_grid),
            "grid": self.grid,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SweepConfig":
        return cls(
            theorems=tuple(data["theorems"]),
            families=tuple(
                {"family": str(fam["family"]), "params": tuple(float(p) for p in fam["params"])}
                for fam in data["families"]
            ),
            a_values=tuple(float(v) for v in data["a_values"]),
            ratios=tuple(float(v) for v in data["ratios"]),
            s_grid=tuple(float(v) for v in data["s_grid"]),
            m_grid=tuple(float(v) for v in data["m_grid"]),
            q_grid=tuple(float(v) for v in data["q_grid"]),
            grid=int(data.get("grid", 48)),
            seed=int(data.get("seed", 0)),
        )

    @classmethod
    def from_json(cls, text: str) -> "SweepConfig":
        return cls.from_dict(json.loads(text))


def default_sweep_config() -> SweepConfig:
    """The shipped default grid: every theorem over power families.

    Powers with exponent >= 2 keep |f'|^q harmonically (s,m)-convex for every
    (s, m, q) in the grid; exponents 1 and 1.5 exercise the certification gate
    (their gradient instances are only partially certifiable and are skipped
    where the check fails).
    """
    return SweepConfig(
        theorems=("HarmHH", "II1", "I1", "I2", "FS1", "FS2", "II2", "II3", "II4"),
        families=(
            {"family": "pow", "params": (1.0, 1.0, 0.0)},
            {"family": "pow", "params": (1.0, 1.5, 0.0)},
            {"family": "pow", "params": (1.0, 2.0, 0.0)},
            {"family": "pow", "params": (2.0, 2.0, 0.0)},
            {"family": "pow", "params": (1.0, 2.5, 0.0)},
            {"family": "pow", "params": (1.0, 3.0, 0.0)},
        ),
        a_values=(1.0, 1.5, 2.0),
        ratios=(1.5, 2.0, 5.0),
        s_grid=(0.25, 0.5, 0.75, 1.0),
        m_grid=(0.5, 0.8, 1.0),
        q_grid=(1.0, 1.5, 2.0, 3.0),
        grid=48,
        seed=20260810,
    )


def make_function(descriptor: dict, m: float, iv: Interval) -> FunctionSpec:
    """Instantiate a family descriptor with a domain covering [m*a, b/m]."""
    lo = m * iv.a * (1.0 - _DOMAIN_PAD)
    hi = iv.b / m * (1.0 + _DOMAIN_PAD)
    return FunctionSpec(descriptor["family"], tuple(float(p) for p in descriptor["params"]), lo, hi)


@dataclass
class SweepResult:
    config: SweepConfig
    records: list[VerificationRecord]
    skipped: list[dict]
    findings: list[Finding]

    @property
    def summary(self) -> dict:
        margins = [r.margin for r in self.records]
        return {
            "instances_evaluated": len(self.records),
            "instances_skipped": len(self.skipped),
            "violations": sum(1 for f in self.findings if f.kind == "BoundViolation"),
            "findings": len(self.findings),
            "worst_margin": min(margins) if margins else None,
            "mean_margin": (sum(margins) / len(margins)) if margins else None,
        }


def _instance_plan(cfg: SweepConfig) -> list[tuple]:
    """Deterministic enumeration: theorem -> family -> a -> ratio -> s -> m -> q."""
    plan: list[tuple] = []
    for theorem in cfg.theorems:
        for fam in cfg.families:
            for a in cfg.a_values:
                for ratio in cfg.ratios:
                    iv = Interval(a, a * ratio)
                    if theorem in ("HH", "HarmHH"):
                        plan.append((theorem, fam, iv, None, None, None))
                        continue
                    for s in cfg.s_grid:
                        if theorem in ("I1", "I2") and s != 1.0:
                            continue
                        for m in cfg.m_grid:
                            if theorem in ("I1", "I2", "FS1", "FS2") and m != 1.0:
                                continue
                            if theorem == "II1":
                                plan.append((theorem, fam, iv, s, m, None))
                                continue
                            for q in cfg.q_grid:
                                if theorem in ("I2", "FS2", "II4") and not q > 1.0:
                                    continue
                                plan.append((theorem, fam, iv, s, m, q))
    return plan


def _evaluate_instance(item: tuple, grid: int):
    theorem, fam, iv, s, m, q = item
    descriptor = {"theorem": theorem, "family": fam["family"], "params": list(fam["params"]),
                  "a": iv.a, "b": iv.b, "s": s, "m": m, "q": q}
    try:
        if theorem in ("HH", "HarmHH"):
            f = make_function(fam, 1.0, iv)
            return bounds.verify_hh_double(f, iv, harmonic=(theorem == "HarmHH"), grid=grid), descriptor
        f = make_function(fam, m, iv)
        if theorem == "II1":
            return bounds.verify_II1(f, SMParams(s, m), iv, grid=grid), descriptor
        return bounds.verify_bound(theorem, f, SMParams(s, m, q), iv, grid=grid), descriptor
    except CertificationError as exc:
        descriptor["reason"] = str(exc)
        return None, descriptor
    except Exception as exc:  # aggregated, never aborts the sweep
        descriptor["error"] = f"{type(exc).__name__}: {exc}"
        return exc, descriptor


def _worker_count() -> int:
    env = os.environ.get("HHKIT_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def run_sweep(cfg: SweepConfig, progress: Optional[Callable[[int, int], None]] = None) -> SweepResult:
    """Evaluate every combination in ``cfg``; certification failures become
    skips, margin violations and per-instance errors become findings."""
    plan = _instance_plan(cfg)
    workers = _worker_count()
    results: list = [None] * len(plan)
    if workers > 1 and len(plan) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for idx, out in enumerate(pool.map(lambda it: _evaluate_instance(it, cfg.grid), plan)):
                results[idx] = out
                if progress:
                    progress(idx + 1, len(plan))
    else:
        for idx, item in enumerate(plan):
            results[idx] = _evaluate_instance(item, cfg.grid)
            if progress:
                progress(idx + 1, len(plan))

    records: list[VerificationRecord] = []
    skipped: list[dict] = []
    findings: list[Finding] = []
    for outcome, descriptor in results:
        if outcome is None:
            skipped.append(descriptor)
            continue
        if isinstance(outcome, Exception):
            # Severity carries no magnitude for aggregated errors; 0 keeps the
            # report strict JSON (no Infinity literals).
            findings.append(
                Finding(
                    kind="EvaluationError",
                    severity=0.0,
                    description=descriptor.get("error", "unexpected error"),
                    payload=descriptor,
                )
            )
            continue
        records.append(outcome)
        if not outcome.satisfied:
            findings.append(
                Finding(
                    kind="BoundViolation",
                    severity=abs(min(outcome.margin, 0.0)),
                    description=(
                        f"{outcome.theorem} violated by {outcome.family} on "
                        f"[{outcome.interval.a}, {outcome.interval.b}] (margin {outcome.margin:.6e})"
                    ),
                    payload=outcome.to_dict(),
                )
            )
    return SweepResult(config=cfg, records=records, skipped=skipped, findings=findings)


# ---------------------------------------------------------------------------
# Randomized counterexample search with witness shrinking.
# ---------------------------------------------------------------------------

_SEARCH_FAMILIES = (
    {"family": "pow", "params": (1.0, 1.0, 0.0)},
    {"family": "pow", "params": (1.0, 1.5, 0.0)},
    {"family": "pow", "params": (1.0, 2.0, 0.0)},
    {"family": "pow", "params": (1.0, 3.0, 0.0)},
    {"family": "pow", "params": (0.5, 2.5, 0.0)},
)

_SHRINK_STEPS = 20


def _search_instance(theorem: str, fam: dict, a: float, ratio: float, s: float, m: float, q: float,
                     grid: int, enforce_certification: bool) -> Optional[VerificationRecord]:
    iv = Interval(a, a * ratio)
    params = SMParams(s, m, q)
    f = make_function(fam, m, iv)
    try:
        if theorem == "II1":
            return bounds.verify_II1(f, params, iv, grid=grid,
                                     enforce_certification=enforce_certification)
        if theorem in ("HH", "HarmHH"):
            return bounds.verify_hh_double(f, iv, harmonic=(theorem == "HarmHH"), grid=grid)
        return bounds.verify_bound(theorem, f, params, iv, grid=grid,
                                   enforce_certification=enforce_certification)
    except (CertificationError, ParameterError, DomainError):
        return None


def _shrink(theorem: str, fam: dict, point: dict, grid: int, enforce: bool) -> dict:
    """Bisect each parameter toward its safe anchor while the violation persists.

    Anchors: m -> 1, s -> 1, q -> 1 (or just above for q>1 theorems), ratio -> 1+.
    20 steps per parameter localize the violation boundary to ~1e-6 of range.
    """
    anchors = {"m": 1.0, "s": 1.0, "q": 1.5 if theorem in ("I2", "FS2", "II4") else 1.0, "ratio": 1.05}
    current = dict(point)
    for name, anchor in anchors.items():
        lo_bad = current[name]
        hi_good = anchor
        for _ in range(_SHRINK_STEPS):
            trial = 0.5 * (lo_bad + hi_good)
            candidate = dict(current)
            candidate[name] = trial
            rec = _search_instance(
                theorem, fam, candidate["a"], candidate["ratio"], candidate["s"],
                candidate["m"], candidate["q"], grid, enforce,
            )
            if rec is not None and rec.margin < -TOL_ACCEPT:
                lo_bad = trial
            else:
                hi_good = trial
        current[name] = lo_bad
    return current


def search_counterexample(
    theorem: str,
    budget: int,
    seed: int,
    families: Sequence[dict] = _SEARCH_FAMILIES,
    s_range: tuple[float, float] = (0.25, 1.0),
    m_range: tuple[float, float] = (0.5, 1.0),
    q_range: tuple[float, float] = (1.0, 3.0),
    a_range: tuple[float, float] = (0.5, 3.0),
    ratio_range: tuple[float, float] = (1.1, 10.0),
    grid: int = 24,
    enforce_certification: bool = True,
) -> Optional[Finding]:
    """Randomized falsification: draw instances, certify, evaluate, and return
    the worst violating instance (shrunk toward the violation boundary), or
    None when the budget is exhausted without a violation.

    ``enforce_certification=False`` exists for detector sanity tests: it
    evaluates instances whose convexity gate fails, which is the only way to
    manufacture a violation of a true theorem.
    """
    if budget < 1:
        raise ParameterError(f"search budget must be >= 1, got {budget}")
    if theorem not in ALL_THEOREMS:
        raise ParameterError(f"unknown theorem {theorem!r}; one of {ALL_THEOREMS}")
    rng = random.Random(seed)
    worst: Optional[tuple[float, dict, dict]] = None
    for _ in range(budget):
        fam = families[rng.randrange(len(families))]
        point = {
            "a": rng.uniform(*a_range),
            "ratio": rng.uniform(*ratio_range),
            "s": rng.uniform(*s_range),
            "m": rng.uniform(*m_range),
            "q": rng.uniform(*q_range) if theorem in ("I2", "FS2", "II4") else max(1.0, rng.uniform(*q_range)),
        }
        if theorem in ("I1", "I2"):
            point["s"] = 1.0
            point["m"] = 1.0
        elif theorem in ("FS1", "FS2"):
            point["m"] = 1.0
        if theorem in ("I2", "FS2", "II4") and point["q"] <= 1.0:
            point["q"] = 1.0 + 0.5 * (q_range[1] - 1.0)
        rec = _search_instance(theorem, fam, point["a"], point["ratio"], point["s"],
                               point["m"], point["q"], grid, enforce_certification)
        if rec is None:
            continue
        if rec.margin < -TOL_ACCEPT and (worst is None or rec.margin < worst[0]):
            worst = (rec.margin, dict(fam), point)
    if worst is None:
        return None
    margin, fam, point = worst
    worst_rec = _search_instance(theorem, fam, point["a"], point["ratio"], point["s"],
                                 point["m"], point["q"], grid, enforce_certification)
    boundary = _shrink(theorem, fam, point, grid, enforce_certification)
    boundary_rec = _search_instance(theorem, fam, boundary["a"], boundary["ratio"], boundary["s"],
                                    boundary["m"], boundary["q"], grid, enforce_certification)
    if boundary_rec is None or boundary_rec.margin >= -TOL_ACCEPT:
        boundary, boundary_rec = point, worst_rec
    return Finding(
        kind="BoundViolation",
        severity=abs(worst_rec.margin),
        description=(
            f"{theorem} violated by {worst_rec.family} at a={point['a']!r}, "
            f"b={point['a'] * point['ratio']!r}, s={point['s']!r}, m={point['m']!r}, "
            f"q={point['q']!r} (margin {worst_rec.margin:.6e}; boundary witness at "
            f"m={boundary['m']!r}, s={boundary['s']!r})"
        ),
        payload={
            "worst_record": worst_rec.to_dict(),
            "worst_parameters": point,
            "boundary_record": boundary_rec.to_dict(),
            "boundary_parameters": boundary,
            "certification_enforced": enforce_certification,
        },
    )


# ---------------------------------------------------------------------------
# Reduction-identity adjudication.
# ---------------------------------------------------------------------------

_PRINTED_AGREEMENT_TOL = 1e-8
_ORACLE_CHAIN_TOL = 1e-9


def check_reductions(
    iv: Interval,
    s_grid: Sequence[float] = (0.25, 0.5, 0.75, 1.0),
    q_grid: Sequence[float] = (1.5, 2.0, 3.0),
) -> list[Finding]:
    """Oracle-level reduction chain plus printed-form adjudication on one interval.

    Oracle identities (independent quadrature formulations, tolerance 1e-9)
    produce ReductionMismatch findings when violated -- none are expected.
    Printed forms deviating from their oracle by more than 1e-8 produce
    ClosedFormDeviation findings: these document the source material.
    """
    findings: list[Finding] = []

    for name, lhs, rhs in kernel_oracle_identities(iv, tuple(s_grid), tuple(q for q in q_grid if q > 1.0)):
        dev = abs(lhs - rhs)
        if dev > _ORACLE_CHAIN_TOL:
            findings.append(Finding(
                kind="ReductionMismatch",
                severity=dev,
                description=f"oracle reduction {name} failed on [{iv.a}, {iv.b}] (|dev|={dev:.3e})",
                payload={"level": "oracle", "identity": name, "a": iv.a, "b": iv.b, "lhs": lhs, "rhs": rhs},
            ))

    def printed_findings(cs: CoefficientSet, context: dict) -> None:
        for label, value, oracle in zip(cs.labels, cs.values, cs.oracle_values):
            dev = abs(value - oracle)
            if dev > _PRINTED_AGREEMENT_TOL:
                best = min(abs(value - o) for o in set(cs.oracle_values))
                note = "" if best > _PRINTED_AGREEMENT_TOL else " (matches a different oracle of the same set: printed pairing swapped)"
                findings.append(Finding(
                    kind="ClosedFormDeviation",
                    severity=dev,
                    description=f"printed {cs.name}.{label} deviates from its defining integral by {dev:.6e}{note}",
                    payload={"level": "printed", **context, "label": label, "printed": value,
                             "oracle": oracle, "best_match_dev": best},
                ))

    printed_findings(coeff_lambda(iv), {"set": "Lambda", "a": iv.a, "b": iv.b})
    for q in q_grid:
        if q > 1.0:
            printed_findings(coeff_mu(q, iv), {"set": "Mu", "q": q, "a": iv.a, "b": iv.b})
    for s in s_grid:
        if s > 0.0:
            printed_findings(coeff_C(s, iv), {"set": "C", "s": s, "a": iv.a, "b": iv.b})
        for q in q_grid:
            printed_findings(coeff_rho(s, q, iv), {"set": "Rho", "s": s, "q": q, "a": iv.a, "b": iv.b})
            if q > 1.0:
                printed_findings(coeff_nu(s, q, iv), {"set": "Nu", "s": s, "q": q, "a": iv.a, "b": iv.b})

    # Remark-level cross-identities: the source asserts C(1) = lambda and the
    # s = 1 hypergeometric mu forms; compare the printed values directly.
    lam = coeff_lambda(iv)
    c1 = coeff_C(1.0, iv)
    for idx, (lam_label, c_label) in enumerate((("lambda1", "C1"), ("lambda2", "C2"), ("lambda3", "C3"))):
        dev = abs(lam.values[idx] - c1.values[idx])
        if dev > _PRINTED_AGREEMENT_TOL:
            findings.append(Finding(
                kind="ReductionMismatch",
                severity=dev,
                description=(
                    f"remark identity {c_label}(1,a,b) = {lam_label} fails for the printed forms "
                    f"(|dev|={dev:.6e}); the oracle-level identity holds"
                ),
                payload={"level": "printed", "a": iv.a, "b": iv.b,
                         "printed_lambda": lam.values[idx], "printed_C_at_1": c1.values[idx]},
            ))
    for q in q_grid:
        if not q > 1.0:
            continue
        mu = coeff_mu(q, iv)
        nu1 = coeff_nu(1.0, q, iv)
        for mu_hyp_label, mu_hyp, nu_label, nu_val in (
            ("mu1_hypergeometric", mu.values[2], "nu1", nu1.values[0]),
            ("mu2_hypergeometric", mu.values[3], "nu2", nu1.values[1]),
        ):
            dev = abs(mu_hyp - nu_val)
            if dev > _PRINTED_AGREEMENT_TOL:
                findings.append(Finding(
                    kind="ReductionMismatch",
                    severity=dev,
                    description=(
                        f"remark pairing {mu_hyp_label} disagrees with {nu_label}(1,q) by {dev:.6e} "
                        f"at q={q}: the printed mu hypergeometric labels are swapped"
                    ),
                    payload={"level": "printed", "q": q, "a": iv.a, "b": iv.b,
                             mu_hyp_label: mu_hyp, nu_label: nu_val},
                ))
    return findings


def build_adjudication_report(
    intervals: Sequence[Interval] = (Interval(1.0, 2.0), Interval(1.0, 5.0), Interval(2.0, 3.0)),
    s_grid: Sequence[float] = (0.25, 0.5, 0.75, 1.0),
    q_grid: Sequence[float] = (1.5, 2.0, 3.0),
) -> dict:
    """Deterministic closed-form adjudication document (criterion: the printed
    coefficient audit).  Contents describe the source formulas, not this
    implementation."""
    coefficient_tables = []
    findings: list[Finding] = []
    for iv in intervals:
        sets: list[dict] = [coeff_lambda(iv).to_dict()]
        for q in q_grid:
            if q > 1.0:
                sets.append({**coeff_mu(q, iv).to_dict(), "q": q})
        for s in s_grid:
            if s > 0.0:
                sets.append({**coeff_C(s, iv).to_dict(), "s": s})
            for q in q_grid:
                sets.append({**coeff_rho(s, q, iv).to_dict(), "s": s, "q": q})
                if q > 1.0:
                    sets.append({**coeff_nu(s, q, iv).to_dict(), "s": s, "q": q})
        coefficient_tables.append({"a": iv.a, "b": iv.b, "sets": sets})
        findings.extend(check_reductions(iv, s_grid, q_grid))
    return {
        "schema_version": SCHEMA_VERSION,
        "intervals": [{"a": iv.a, "b": iv.b} for iv in intervals],
        "s_grid": list(s_grid),
        "q_grid": list(q_grid),
        "printed_agreement_tol": _PRINTED_AGREEMENT_TOL,
        "oracle_chain_tol": _ORACLE_CHAIN_TOL,
        "coefficient_tables": coefficient_tables,
        "findings": [f.to_dict() for f in findings],
    }


# ---------------------------------------------------------------------------
# Deterministic report serialization (15 significant digits everywhere).
# ---------------------------------------------------------------------------


def _quantize(obj):
    """Round floats to 15 significant digits (by value, so json prints them so)."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, float):
        return float(format(float(obj), ".15g"))
    if isinstance(obj, dict):
        return {k: _quantize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_quantize(v) for v in obj]
    return obj


def _fmt15(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return format(value, ".15g")
    return str(value)


def render_report_json(result: SweepResult) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "config": result.config.to_dict(),
        "summary": result.summary,
        "records": [r.to_dict() for r in result.records],
        "skipped": result.skipped,
        "findings": [f.to_dict() for f in result.findings],
    }
    return json.dumps(_quantize(doc), indent=2, sort_keys=True) + "\n"


CSV_FIELDS = ("theorem", "a", "b", "s", "m", "q", "family", "lhs", "rhs", "margin", "satisfied")


def render_report_csv(result: SweepResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in result.records:
        row = r.to_dict()
        writer.writerow([_fmt15(row[k]) for k in CSV_FIELDS])
    return buf.getvalue()


def write_report_json(result: SweepResult, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_report_json(result))


def write_report_csv(result: SweepResult, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(render_report_csv(result))
