"""Approximate-counter experiments under the on-arrival error model.

Every counter here is an *estimator sequence*: strictly increasing values
A_0 = 0 < A_1 < ... < A_{K-1}.  An increment advances state i to i+1 with
probability 1 / (A_{i+1} - A_i), which makes the estimate unbiased; at the
top state increments are ignored (saturation).  The on-arrival MSE after S
increments of a perfect counter is (1/S) * sum_{t=1..S} (C_t - t)^2, where
C_t is the estimate after increment t.

Two evaluators are provided and cross-check each other:

* Monte Carlo (:func:`on_arrival_mse_mc`).  Instead of stepping S times it
  draws the geometric sojourn time of every state and accumulates each
  state's error span in closed form, so a trial costs O(K) regardless of S.
  Trial t uses its own stream, PCG64 seeded with SeedSequence((*seed, t));
  results are reduced by order-independent summation, so trials can run in
  any order or in parallel.
* Exact dynamic programming (:func:`on_arrival_mse_dp`), which propagates
  the full state distribution step by step.  O(K*S), guarded by a budget.

Baselines: the Morris counter A_c = a*((1+1/a)**c - 1), the CEDAR
recurrence A_{i+1} = A_i + 1 + 2*delta^2*A_i, the SEAD grid, and plain
integers.  Morris and CEDAR are calibrated by binary search for the
smallest parameter whose top value reaches a target range; both gaps grow
geometrically (ratio 1+1/a resp. 1+2*delta^2), so error is monotone in the
parameter and range-feasibility is the binding constraint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .codec import F2PSpec, Flavor
from .grids import Grid, enumerate_grid, sead_grid
from .specs import format_name

__all__ = [
    "EstimatorSequence",
    "CounterState",
    "OnArrivalResult",
    "DpBudgetError",
    "DEFAULT_DP_BUDGET",
    "sequence_from_grid",
    "morris_sequence",
    "cedar_sequence",
    "calibrate",
    "increment",
    "estimate",
    "on_arrival_mse_mc",
    "on_arrival_mse_dp",
    "dp_estimate_means",
    "table5_report",
]

DEFAULT_DP_BUDGET = 2**31  # state-steps (K * S)


class DpBudgetError(RuntimeError):
    """The exact DP evaluation would exceed its state-step budget."""


@dataclass(frozen=True, eq=False)
class EstimatorSequence:
    """Strictly increasing counter estimates starting at 0."""

    values: np.ndarray
    source: str = ""

    def __post_init__(self) -> None:
        vals = np.ascontiguousarray(self.values, dtype=np.float64)
        if vals.ndim != 1 or vals.size < 2:
            raise ValueError("an estimator sequence needs at least two values")
        if vals[0] != 0.0:
            raise ValueError("estimator sequences must start at A_0 = 0")
        if not np.all(np.isfinite(vals)) or not np.all(np.diff(vals) > 0):
            raise ValueError("estimator sequence must be finite and strictly increasing")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return self.values.size

    @property
    def vmax(self) -> float:
        return float(self.values[-1])

    def advance_probs(self) -> np.ndarray:
        """Per-state advance probability 1/gap, clipped to 1."""
        return np.minimum(1.0, 1.0 / np.diff(self.values))


@dataclass(frozen=True)
class CounterState:
    """Current position in an estimator sequence."""

    index: int = 0


@dataclass(frozen=True)
class OnArrivalResult:
    """On-arrival MSE of one counter over S increments."""

    s: int
    mse: float
    stderr: float | None
    trials: int
    method: str  # "mc" | "dp"


def sequence_from_grid(grid: Grid) -> EstimatorSequence:
    """The grid's nonnegative values as an estimator sequence."""
    vals = grid.values[grid.values >= 0]
    if vals.size == 0 or vals[0] != 0.0:
        raise ValueError(f"grid of {grid.spec} lacks the value 0")
    return EstimatorSequence(vals.copy(), source=format_name(grid.spec))


def morris_sequence(a: float, width: int) -> EstimatorSequence:
    """Morris estimates A_c = a*((1+1/a)**c - 1) over 2**width states.

    ``a = inf`` is the plain-counting limit A_c = c.
    """
    if not a > 0:
        raise ValueError(f"Morris parameter must be positive, got {a}")
    k = 1 << width
    c = np.arange(k, dtype=np.float64)
    vals = c if math.isinf(a) else a * np.expm1(c * math.log1p(1.0 / a))
    return EstimatorSequence(vals, source=f"morris(a={a!r})")


def cedar_sequence(delta: float, width: int) -> EstimatorSequence:
    """CEDAR estimates A_{i+1} = A_i + 1 + 2*delta^2*A_i over 2**width states.

    ``delta = 0`` is the plain-counting boundary case.
    """
    if not 0 <= delta < 1:
        raise ValueError(f"CEDAR delta must be in [0, 1), got {delta}")
    k = 1 << width
    x = 2.0 * delta * delta
    vals = np.empty(k, dtype=np.float64)
    acc = 0.0
    for i in range(k):
        vals[i] = acc
        acc += 1.0 + x * acc
    return EstimatorSequence(vals, source=f"cedar(delta={delta!r})")


def _geometric_top(x: float, k: int) -> float:
    """Top value of the gap-ratio-(1+x) family: ((1+x)**(k-1) - 1)/x."""
    if x == 0.0:
        return float(k - 1)
    try:
        return math.expm1((k - 1) * math.log1p(x)) / x
    except OverflowError:
        return math.inf


def calibrate(kind: str, width: int, target_max: float) -> float:
    """Smallest parameter whose top estimate reaches ``target_max``.

    Returns 1/a for Morris and delta for CEDAR; both make the top value
    monotone increasing, and smaller values mean smaller error.  Binary
    search to 1e-9 relative tolerance.
    """
    if kind not in ("morris", "cedar"):
        raise ValueError(f"kind must be 'morris' or 'cedar', got {kind!r}")
    k = 1 << width
    if target_max < k - 1:
        raise ValueError(
            f"target {target_max} below the plain-integer max {k - 1} of width {width}"
        )

    def top(param: float) -> float:
        x = param if kind == "morris" else 2.0 * param * param
        return _geometric_top(x, k)

    if top(0.0) >= target_max:
        return 0.0
    if kind == "cedar":
        hi = 1.0 - 1e-12  # delta < 1
        if top(hi) < target_max:
            raise ValueError(
                f"CEDAR cannot reach {target_max} at width {width} with delta < 1"
            )
    else:
        hi = 1.0
        while top(hi) < target_max:
            hi *= 2.0
            if hi > 1e30:
                raise ValueError(f"Morris cannot reach {target_max} at width {width}")
    lo = 0.0
    while hi - lo > 1e-9 * hi:
        mid = 0.5 * (lo + hi)
        if top(mid) >= target_max:
            hi = mid
        else:
            lo = mid
    return hi


def increment(
    state: CounterState, seq: EstimatorSequence, rng: np.random.Generator
) -> CounterState:
    """One probabilistic increment; silently saturates at the top state."""
    i = state.index
    if i >= len(seq) - 1:
        return state
    gap = seq.values[i + 1] - seq.values[i]
    if gap <= 1.0 or rng.random() < 1.0 / gap:
        return CounterState(i + 1)
    return state


def estimate(state: CounterState, seq: EstimatorSequence) -> float:
    return float(seq.values[state.index])


def _entropy(seed) -> tuple[int, ...]:
    return (int(seed),) if isinstance(seed, (int, np.integer)) else tuple(seed)


def _trial_mse(
    values: np.ndarray, logq: np.ndarray, s: int, rng: np.random.Generator
) -> float:
    """On-arrival squared-error mean of one trial, via state sojourns.

    State i is held for a Geometric(p_i) number of increments (inverse-CDF
    sampled from one uniform), and the error sum over the increments spent
    at one state has a closed form, so the whole trial is O(K).
    """
    k = values.size
    u = rng.random(k - 1)
    with np.errstate(divide="ignore"):
        sojourn = np.floor(np.log1p(-u) / logq).astype(np.int64) + 1
    arrive = np.empty(k, dtype=np.int64)
    arrive[0] = 0
    np.cumsum(sojourn, out=arrive[1:])
    leave = np.empty(k, dtype=np.int64)
    leave[:-1] = arrive[1:]  # first increment spent in the next state
    leave[-1] = s + 1  # the top state saturates
    a = np.maximum(arrive, 1)
    b = np.minimum(leave - 1, s)
    live = a <= b
    # sum_{t=a..b} (t - A)^2 = m*d^2 + d*m*(m-1) + (m-1)*m*(2m-1)/6, d = a - A
    d = a[live] - values[live]
    m = (b[live] - a[live] + 1).astype(np.float64)
    err = m * d * d + d * m * (m - 1.0) + m * (m - 1.0) * (2.0 * m - 1.0) / 6.0
    return float(err.sum()) / s


def on_arrival_mse_mc(
    seq: EstimatorSequence, s: int, trials: int, seed
) -> OnArrivalResult:
    """Monte-Carlo on-arrival MSE over independent trials.

    ``seed`` is an int or tuple of ints; trial t draws from
    PCG64(SeedSequence((*seed, t))), so results are reproducible and
    independent of execution order.
    """
    if s < 1 or trials < 1:
        raise ValueError("need s >= 1 and trials >= 1")
    base = _entropy(seed)
    with np.errstate(divide="ignore"):
        logq = np.log1p(-seq.advance_probs())  # -inf where the gap is 1
    per_trial = np.empty(trials, dtype=np.float64)
    for t in range(trials):
        rng = np.random.default_rng((*base, t))
        per_trial[t] = _trial_mse(seq.values, logq, s, rng)
    mse = float(per_trial.mean())
    stderr = float(per_trial.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    return OnArrivalResult(s=s, mse=mse, stderr=stderr, trials=trials, method="mc")


def _dp_run(seq: EstimatorSequence, s: int, budget: int, want_means: bool):
    k = len(seq)
    if k * s > budget:
        raise DpBudgetError(
            f"DP needs {k}*{s} = {k * s} state-steps, over the budget of {budget}; "
            "use the Monte-Carlo evaluator instead"
        )
    a = seq.values
    a2 = a * a
    p = seq.advance_probs()
    dist = np.zeros(k, dtype=np.float64)
    dist[0] = 1.0
    means = np.empty(s, dtype=np.float64) if want_means else None
    err_sum = 0.0
    for t in range(1, s + 1):
        move = dist[:-1] * p
        dist[:-1] -= move
        dist[1:] += move
        e1 = dist @ a
        err_sum += dist @ a2 - 2.0 * t * e1 + float(t) * t
        if means is not None:
            means[t - 1] = e1
    return err_sum / s, means


def on_arrival_mse_dp(
    seq: EstimatorSequence, s: int, budget: int = DEFAULT_DP_BUDGET
) -> OnArrivalResult:
    """Exact on-arrival MSE by propagating the full state distribution."""
    if s < 1:
        raise ValueError("need s >= 1")
    mse, _ = _dp_run(seq, s, budget, want_means=False)
    return OnArrivalResult(s=s, mse=float(mse), stderr=None, trials=0, method="dp")


def dp_estimate_means(
    seq: EstimatorSequence, s: int, budget: int = DEFAULT_DP_BUDGET
) -> np.ndarray:
    """Exact E[estimate] after each increment 1..s (unbiasedness probe)."""
    _, means = _dp_run(seq, s, budget, want_means=True)
    return means


def table5_report(
    widths,
    h: int,
    trials: int,
    seed: int,
    *,
    target_flavor: str = "li",
    method: str = "mc",
    dp_budget: int = DEFAULT_DP_BUDGET,
) -> list[dict]:
    """Accuracy comparison rows: F2P-LI vs calibrated CEDAR/Morris vs SEAD.

    For each width, the baselines are calibrated to the range of the
    F2P-LI^h grid (or F2P-LR^h with ``target_flavor='lr'``), every counter
    runs to S = that range, and MSEs are normalized by the row minimum.
    """
    if target_flavor not in ("li", "lr"):
        raise ValueError(f"target_flavor must be 'li' or 'lr', got {target_flavor!r}")
    if method not in ("mc", "dp"):
        raise ValueError(f"method must be 'mc' or 'dp', got {method!r}")
    rows: list[dict] = []
    for w in widths:
        if not 6 <= w <= 20:
            raise ValueError(f"counter width must be in 6..20, got {w}")
        li_spec = F2PSpec(w, h, Flavor.LI)
        f2p_seq = sequence_from_grid(enumerate_grid(li_spec))
        if target_flavor == "li":
            target = f2p_seq.vmax
        else:
            target = float(enumerate_grid(F2PSpec(w, h, Flavor.LR)).vmax)
        s = math.floor(target)
        r = calibrate("morris", w, target)
        delta = calibrate("cedar", w, target)
        runs = [
            (format_name(li_spec), None, f2p_seq),
            ("cedar", delta, cedar_sequence(delta, w)),
            ("morris", r, morris_sequence(math.inf if r == 0 else 1.0 / r, w)),
            (f"sead:{w}", None, sequence_from_grid(sead_grid(w))),
        ]
        results = []
        for idx, (name, param, seq) in enumerate(runs):
            if method == "dp":
                res = on_arrival_mse_dp(seq, s, budget=dp_budget)
            else:
                res = on_arrival_mse_mc(seq, s, trials, (seed, w, idx))
            results.append((name, param, res))
        floor_mse = min(res.mse for _, _, res in results)
        for name, param, res in results:
            if floor_mse:
                normalized = res.mse / floor_mse
            else:
                normalized = 1.0 if res.mse == 0.0 else float("inf")
            rows.append(
                {
                    "width": w,
                    "counter": name,
                    "param": param,
                    "s": res.s,
                    "trials": res.trials,
                    "method": res.method,
                    "mse": res.mse,
                    "stderr": res.stderr,
                    "normalized": normalized,
                }
            )
    return rows
