"""Brute-force oracle and certification of the counterexample claims.

Certificates re-derive every claimed inequality from raw value tables
(2^n enumeration plus the transform), never from the closed forms being
certified.  Before a certificate is issued, the closed forms themselves
are gated against the enumeration oracle and the maximum relative
discrepancy is recorded as the certificate's first check.

The oracle builds its tables in extended precision (np.longdouble) so
that per-mask coefficient comparisons stay meaningful: the smallest
squared coefficient of a pair with weights a_i is prod a_i^2, which for
small weights sits many orders below the double-precision noise floor
of a 2^n transform.  Extended precision is an oracle-side measure only;
the library under test stays in complex128.

Margins are reported for every check, pass or fail: for strict
inequalities the margin is the distance to the threshold (positive
means pass); for approximate equalities it is tolerance minus observed
error.  Strict claims get no epsilon forgiveness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .construct import (
    ParamSeq,
    build_pq,
    clamped_sum_l2_norm,
    evaluate_at,
    neeman_function,
    normalized_closed_form,
    normalized_real,
    remark3_params,
    theorem_params,
    unimodular_complex,
    _log2_one_plus_sq,
    _pq_tables,
)
from .errors import ParameterError
from .spectrum import (
    DEFAULT_TABLE_CAP,
    ZERO_WEIGHT_CUTOFF,
    check_table_dim,
    fwht_inplace,
    lift_zero_mean,
    popcounts,
    scale,
    stats,
    walsh_transform,
)

SQRT2 = math.sqrt(2.0)

CERTIFICATE_KINDS = ("theorem1", "theorem2", "remark2", "remark3", "classical_rs", "neeman")

#: Influence band of the clamp=2 family, pinned from this repo's first
#: oracle run over n in [5, 22]: brute-force values ranged over
#: [1.00557, 1.02882] there, and the inactive-clamp limit is exactly 1.
#: The band includes 1.0 so degenerate rows pass too.  Checked only for
#: clamp == 2.
NEEMAN_INFLUENCE_BAND = (0.99, 1.04)
NEEMAN_BAND_RANGE = (5, 22)


@dataclass(frozen=True)
class Check:
    name: str
    lhs: float
    relation: str  # '<', '>', '<=', '>=', '~abs', '~rel'
    rhs: float
    margin: float
    passed: bool


def check_lt(name: str, lhs: float, rhs: float) -> Check:
    return Check(name, float(lhs), "<", float(rhs), float(rhs - lhs), lhs < rhs)


def check_gt(name: str, lhs: float, rhs: float) -> Check:
    return Check(name, float(lhs), ">", float(rhs), float(lhs - rhs), lhs > rhs)


def check_le(name: str, lhs: float, rhs: float) -> Check:
    return Check(name, float(lhs), "<=", float(rhs), float(rhs - lhs), lhs <= rhs)


def check_ge(name: str, lhs: float, rhs: float) -> Check:
    return Check(name, float(lhs), ">=", float(rhs), float(lhs - rhs), lhs >= rhs)


def check_abs(name: str, lhs: float, target: float, tol: float) -> Check:
    """|lhs - target| <= tol; margin is tol minus the observed error."""
    err = abs(lhs - target)
    return Check(name, float(lhs), "~abs", float(target), float(tol - err), err <= tol)


def check_rel(name: str, lhs: float, target: float, tol: float) -> Check:
    """|lhs - target| <= tol * |target|; margin is tol minus the relative error."""
    err = abs(lhs - target) / max(abs(target), 1e-300)
    return Check(name, float(lhs), "~rel", float(target), float(tol - err), err <= tol)


@dataclass(frozen=True)
class Certificate:
    kind: str
    n: int
    inputs: dict
    checks: tuple[Check, ...]
    overall: bool
    log_base: int = 2  # entropy and bounds use base-2 logs throughout

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "log_base": self.log_base,
            "inputs": dict(self.inputs),
            "checks": [
                {
                    "name": c.name,
                    "lhs": c.lhs,
                    "relation": c.relation,
                    "rhs": c.rhs,
                    "margin": c.margin,
                    "pass": c.passed,
                }
                for c in self.checks
            ],
            "overall": self.overall,
        }

    def to_text(self) -> str:
        lines = [f"certificate kind={self.kind} n={self.n} log_base={self.log_base}"]
        for k, v in self.inputs.items():
            lines.append(f"input {k}={v}")
        for c in self.checks:
            lines.append(
                f"check name={c.name} lhs={c.lhs!r} relation={c.relation} "
                f"rhs={c.rhs!r} margin={c.margin!r} pass={str(c.passed).lower()}"
            )
        lines.append(f"overall={str(self.overall).lower()}")
        return "\n".join(lines)


def make_certificate(kind: str, n: int, inputs: dict, checks: Iterable[Check]) -> Certificate:
    if kind not in CERTIFICATE_KINDS:
        raise ParameterError(f"unknown certificate kind {kind!r}")
    checks = tuple(checks)
    return Certificate(kind, n, dict(inputs), checks, all(c.passed for c in checks))


@dataclass(frozen=True)
class OracleReport:
    """Max relative discrepancies, closed forms vs direct enumeration.

    The entropy error is measured relative to max(|target|, Parseval
    mass): near the degenerate all-weights-one corner the true entropy
    is ~0 and a plain relative error would divide by it.
    """

    trials: int
    seed: int | None
    err_constancy: float      # pointwise |P|^2+|Q|^2 against 2 prod(1+a_i^2)
    err_l2: float
    err_linf_bracket: float   # relative overshoot outside [L, sqrt(2) L]
    err_coefficients: float   # per-mask squared coefficient vs subset product
    err_influence: float
    err_entropy: float

    def max_error(self) -> float:
        return max(
            self.err_constancy,
            self.err_l2,
            self.err_linf_bracket,
            self.err_coefficients,
            self.err_influence,
            self.err_entropy,
        )

    def passed(self, tol: float) -> bool:
        return self.max_error() < tol


def _oracle_errors(a64: np.ndarray, max_table_n: int | None) -> tuple[float, ...]:
    ld = np.longdouble
    n = a64.size
    check_table_dim(n, max_table_n)
    a = a64.astype(ld)
    a2 = a * a
    one_plus = 1.0 + a2
    big_l = ld(np.prod(one_plus)) if n else ld(1.0)

    p, q = _pq_tables(a64, dtype=ld)
    pc = popcounts(n)

    # pointwise constancy of |P|^2 + |Q|^2
    s = p * p + q * q
    target_const = 2.0 * big_l
    err_const = float(np.max(np.abs(s - target_const)) / target_const)

    # coefficient tables, expectation scale
    cp = p.copy()
    cq = q.copy()
    fwht_inplace(cp)
    fwht_inplace(cq)
    cp /= ld(1 << n)
    cq /= ld(1 << n)

    err_l2 = 0.0
    err_bracket = 0.0
    err_coeff = 0.0
    err_infl = 0.0
    err_ent = 0.0

    # independent closed-form targets, linear domain (no log/exp route)
    others = np.array([np.prod(np.delete(one_plus, i)) for i in range(n)], dtype=ld)
    target_l2 = np.sqrt(big_l)
    target_infl = ld(np.sum(a2 * others)) if n else ld(0.0)
    log2_a2 = np.log2(a2) if n else np.zeros(0, dtype=ld)
    target_ent = ld(-np.sum(others * a2 * log2_a2)) if n else ld(0.0)

    prod_table = np.ones(1, dtype=ld)
    for x in a2:
        prod_table = np.concatenate([prod_table, prod_table * x])

    for table, coeffs in ((p, cp), (q, cq)):
        l2 = np.sqrt(np.sum(table * table) / ld(1 << n))
        err_l2 = max(err_l2, float(abs(l2 - target_l2) / target_l2))

        linf = np.max(np.abs(table))
        lo, hi = target_l2, SQRT2 * target_l2
        viol = max((lo - linf) / lo, (linf - hi) / hi, ld(0.0))
        err_bracket = max(err_bracket, float(viol))

        w = coeffs * coeffs
        err_coeff = max(err_coeff, float(np.max(np.abs(w - prod_table) / prod_table)))

        infl = np.sum(w * pc)
        denom = max(abs(target_infl), ld(1e-300))
        err_infl = max(err_infl, float(abs(infl - target_infl) / denom))

        live = w >= ZERO_WEIGHT_CUTOFF
        ent = -np.sum(w[live] * np.log2(w[live])) if live.any() else ld(0.0)
        ent_denom = max(abs(target_ent), big_l)
        err_ent = max(err_ent, float(abs(ent - target_ent) / ent_denom))

    return err_const, err_l2, err_bracket, err_coeff, err_infl, err_ent


_ORACLE_MEMO: dict[tuple, tuple[float, ...]] = {}


def oracle_compare(params: ParamSeq, tol: float = 1e-9, max_table_n: int | None = None) -> OracleReport:
    """Re-derive every closed-form quantity by enumeration; report max errors.

    `tol` is recorded by callers when gating; the report itself always
    carries the raw error figures.
    """
    key = (params.a.tobytes(), max_table_n)
    if key not in _ORACLE_MEMO:
        _ORACLE_MEMO[key] = _oracle_errors(params.a, max_table_n)
    errs = _ORACLE_MEMO[key]
    return OracleReport(1, None, *errs)


def oracle_campaign(
    n: int,
    trials: int = 100,
    seed: int = 12345,
    max_table_n: int | None = None,
    low: float = 0.05,
) -> OracleReport:
    """Aggregate oracle_compare over seeded random weight draws.

    Weights are uniform on (low, 1]; very small a_i are legal but their
    coefficients sink below any enumeration's precision, so the draw
    floor keeps the comparison informative.
    """
    if trials < 1:
        raise ParameterError(f"need at least one trial, got {trials}")
    rng = np.random.default_rng(seed)
    worst = (0.0,) * 6
    for _ in range(trials):
        a = 1.0 - rng.uniform(0.0, 1.0 - low, size=n)
        rep = oracle_compare(ParamSeq(a), max_table_n=max_table_n)
        errs = (
            rep.err_constancy,
            rep.err_l2,
            rep.err_linf_bracket,
            rep.err_coefficients,
            rep.err_influence,
            rep.err_entropy,
        )
        worst = tuple(max(w, e) for w, e in zip(worst, errs))
    return OracleReport(trials, seed, *worst)


def _entropy_bound(n: int) -> float:
    # (n/(n+1)) log2 n, the strict lower bound both unit-norm families beat
    return (n / (n + 1.0)) * math.log2(n) if n >= 1 else 0.0


#: Largest n at which the per-mask coefficient comparison still resolves:
#: the smallest squared coefficient shrinks like prod a_i^2 while the
#: enumeration noise does not, and measured discrepancies cross 1e-12
#: between n = 14 and n = 17 even in extended precision.  Above this the
#: certificate gate drops that one field; aggregate quantities (norms,
#: constancy, influence, entropy) stay gated at every n.
COEFF_GATE_MAX_N = 14


def _gate(params: ParamSeq, tol: float, max_table_n: int | None) -> Check:
    rep = oracle_compare(params, tol=tol, max_table_n=max_table_n)
    errs = [
        rep.err_constancy,
        rep.err_l2,
        rep.err_linf_bracket,
        rep.err_influence,
        rep.err_entropy,
    ]
    if params.n <= COEFF_GATE_MAX_N:
        errs.append(rep.err_coefficients)
    return check_lt("closed_form_oracle_agreement", max(errs), tol)


def certify_theorem1(n: int, tol: float = 1e-9, max_table_n: int | None = None) -> Certificate:
    """Unit-norm real family: bounded by sqrt(2), influence below one,
    entropy above (n/(n+1)) log2 n."""
    params = theorem_params(n)
    gate = _gate(params, tol, max_table_n)
    f = normalized_real(params, max_table_n)
    st = stats(f, max_table_n)
    target_i = n / (n + 1.0)
    checks = [
        gate,
        check_abs("l2_norm_unit", st.l2_norm, 1.0, 1e-12),
        check_le("linf_at_most_sqrt2", st.linf_norm, SQRT2 + 1e-12),
        check_rel("influence_equals_target", st.influence, target_i, tol),
        check_lt("influence_below_one", st.influence, 1.0),
        check_gt("entropy_above_bound", st.entropy, _entropy_bound(n)),
    ]
    return make_certificate("theorem1", n, {"weights": "1/sqrt(n)", "tol": tol}, checks)


def certify_theorem2(n: int, tol: float = 1e-9, max_table_n: int | None = None) -> Certificate:
    """Modulus-one complex family: same influence/entropy split."""
    params = theorem_params(n)
    gate = _gate(params, tol, max_table_n)
    f = unimodular_complex(params, max_table_n)
    dev = float(np.max(np.abs(np.abs(f.values) - 1.0)))
    st = stats(f, max_table_n)
    checks = [
        gate,
        check_lt("modulus_deviation", dev, 1e-12),
        check_lt("influence_below_one", st.influence, 1.0),
        check_rel("influence_equals_target", st.influence, n / (n + 1.0), tol),
        check_gt("entropy_above_bound", st.entropy, _entropy_bound(n)),
    ]
    return make_certificate("theorem2", n, {"weights": "1/sqrt(n)", "tol": tol}, checks)


def certify_remark2(n: int, tol: float = 1e-9, max_table_n: int | None = None) -> Certificate:
    """Lifting by a fresh sign keeps norms and entropy, adds one to influence."""
    params = theorem_params(n)
    gate = _gate(params, tol, max_table_n)
    f = normalized_real(params, max_table_n)
    g = lift_zero_mean(f, max_table_n)
    sf = stats(f, max_table_n)
    sg = stats(g, max_table_n)
    mean_g = float(np.mean(g.values.real))
    checks = [
        gate,
        check_abs("l2_preserved", sg.l2_norm, sf.l2_norm, 1e-12),
        check_abs("linf_preserved", sg.linf_norm, sf.linf_norm, 1e-12),
        check_abs("entropy_preserved", sg.entropy, sf.entropy, 1e-12),
        check_rel("influence_gains_l2_sq", sg.influence, sf.influence + sf.l2_norm**2, tol),
        check_lt("lifted_influence_below_two", sg.influence, 2.0),
        check_abs("lifted_mean_zero", mean_g, 0.0, 1e-12),
    ]
    return make_certificate("remark2", n, {"weights": "1/sqrt(n)", "tol": tol}, checks)


def certify_remark3(n: int, a: float, tol: float = 1e-9, max_table_n: int | None = None) -> Certificate:
    """Scaled family sqrt(a/n): influence inside (a/2, a), entropy above
    (a/2)(log2 n - log2 a); closed forms for any n, enumeration when the
    table fits."""
    params = remark3_params(n, a)
    ncf = normalized_closed_form(params)
    bound = (a / 2.0) * (math.log2(n) - math.log2(a))
    checks = [
        check_gt("cf_influence_above_half_scale", ncf.influence, a / 2.0),
        check_lt("cf_influence_below_scale", ncf.influence, a),
        check_gt("cf_entropy_above_bound", ncf.entropy, bound),
    ]
    cap = DEFAULT_TABLE_CAP if max_table_n is None else max_table_n
    if n <= cap:
        checks.insert(0, _gate(params, tol, max_table_n))
        for label, fn in (("real", normalized_real), ("complex", unimodular_complex)):
            st = stats(fn(params, max_table_n), max_table_n)
            checks += [
                check_gt(f"{label}_influence_above_half_scale", st.influence, a / 2.0),
                check_lt(f"{label}_influence_below_scale", st.influence, a),
                check_gt(f"{label}_entropy_above_bound", st.entropy, bound),
                check_rel(f"{label}_influence_matches_closed_form", st.influence, ncf.influence, tol),
                check_rel(f"{label}_entropy_matches_closed_form", st.entropy, ncf.entropy, tol),
            ]
    return make_certificate(
        "remark3", n, {"weights": "sqrt(a/n)", "scale": a, "tol": tol}, checks
    )


def certify_classical_rs(n: int, tol: float = 1e-9, max_table_n: int | None = None) -> Certificate:
    """Weight-one case: every coefficient of the raw pair has magnitude
    one, and the unit-norm rescaling has influence n/2 and entropy n."""
    params = ParamSeq(np.ones(n))
    gate = _gate(params, tol, max_table_n)
    pair = build_pq(params, max_table_n)
    sp = walsh_transform(pair.p, max_table_n)
    coeff_dev = float(np.max(np.abs(np.abs(sp.coeffs) - 1.0)))
    raw = stats(pair.p, max_table_n)
    norm = stats(scale(pair.p, 2.0 ** (-n / 2.0)), max_table_n)
    checks = [
        gate,
        check_le("coefficient_magnitude_deviation", coeff_dev, 1e-12),
        check_rel("l2_norm_target", raw.l2_norm, 2.0 ** (n / 2.0), 1e-12),
        check_le("linf_over_l2", raw.linf_norm / raw.l2_norm, SQRT2 + 1e-12),
        check_rel("normalized_influence_half_n", norm.influence, n / 2.0, tol),
        check_rel("normalized_entropy_n", norm.entropy, float(n), tol),
    ]
    return make_certificate("classical_rs", n, {"weights": "1", "tol": tol}, checks)


def certify_neeman(
    n: int, clamp: float = 2.0, tol: float = 1e-9, max_table_n: int | None = None
) -> Certificate:
    """Clamped-sum family: unit norm, bounded values; degenerates to the
    plain normalized sum when the clamp never binds, otherwise held to
    the pinned influence band (clamp == 2 only)."""
    f = neeman_function(n, clamp, normalize=True, max_table_n=max_table_n)
    st = stats(f, max_table_n)
    raw_norm = clamped_sum_l2_norm(n, clamp)
    checks = [
        check_abs("l2_norm_unit", st.l2_norm, 1.0, 1e-12),
        check_le("linf_bound", st.linf_norm, clamp / raw_norm + 1e-12),
    ]
    if clamp >= math.sqrt(n):
        checks += [
            check_rel("influence_degenerates_to_one", st.influence, 1.0, tol),
            check_rel("entropy_degenerates_to_log_n", st.entropy, math.log2(n), tol),
        ]
    elif clamp == 2.0 and NEEMAN_BAND_RANGE[0] <= n <= NEEMAN_BAND_RANGE[1]:
        lo, hi = NEEMAN_INFLUENCE_BAND
        checks += [
            check_ge("influence_above_band_low", st.influence, lo),
            check_le("influence_below_band_high", st.influence, hi),
            check_gt("entropy_positive", st.entropy, 0.0),
        ]
    return make_certificate("neeman", n, {"clamp": clamp, "tol": tol}, checks)


@dataclass(frozen=True)
class NeemanReport:
    clamp: float
    rows: tuple[tuple[int, float, float], ...]  # (n, influence, entropy)
    entropy_increasing: bool
    band: tuple[float, float] | None
    influence_in_band: bool
    overall: bool


def neeman_regression(
    ns: Sequence[int], clamp: float = 2.0, max_table_n: int | None = None
) -> NeemanReport:
    """Brute-force (influence, entropy) per dimension for the clamped sum.

    Asserts entropy strictly increases along `ns` and, for clamp == 2,
    that influence stays inside the pinned band.
    """
    ns = list(ns)
    if not ns:
        raise ParameterError("need at least one dimension")
    rows = []
    for n in ns:
        st = stats(neeman_function(n, clamp, normalize=True, max_table_n=max_table_n), max_table_n)
        rows.append((n, st.influence, st.entropy))
    entropies = [r[2] for r in rows]
    increasing = all(b > a for a, b in zip(entropies, entropies[1:]))
    band = NEEMAN_INFLUENCE_BAND if clamp == 2.0 else None
    in_band = True
    if band is not None:
        in_band = all(band[0] <= r[1] <= band[1] for r in rows)
    return NeemanReport(clamp, tuple(rows), increasing, band, in_band, increasing and in_band)


def modulus_spotcheck(params: ParamSeq, samples: int = 10_000, seed: int = 2024) -> float:
    """Max | |f| - 1 | of the modulus-one family over sampled points.

    Streams through evaluate_at, so it runs at any n; this is the only
    modulus check available past the table cap.
    """
    if samples < 1:
        raise ParameterError(f"need at least one sample, got {samples}")
    rng = np.random.default_rng(seed)
    factor = 2.0 ** (-0.5 * (1.0 + float(np.sum(_log2_one_plus_sq(params.a)))))
    worst = 0.0
    for point in rng.integers(0, 1 << params.n, size=samples, dtype=np.uint64):
        pv, qv = evaluate_at(params, int(point))
        worst = max(worst, abs(math.hypot(pv.real, qv.real) * factor - 1.0))
    return worst
