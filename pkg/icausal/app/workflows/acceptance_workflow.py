"""Acceptance workflow - runs every acceptance criterion and prints a pass/fail table."""

import io
import time
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from ...core.constants import EXIT_CHECK_FAILED, EXIT_OK, TOLERANCE
from ...core.errors import DivergentThresholdError
from ...domains.branch import (
    MassRegister, branch_entropy_trace, controlled_unitary, ics_strategy, ics_unitaries, run_superposed,
    standard_mass_basis,
)
from ...domains.protocols import (
    apply_directly, bell_branches, correction_table, entangle_2ics, implement_nonlocal_channel, load_corpus,
    nlwe_result, roundtrip, search_corrections, teleport_mics, unlock_smolin,
)
from ...domains.qcore import (
    I2, SIGMA_X, SWAP, KrausChannel, PureState, ket, random_channel, random_density, random_state,
    tensor, trace_distance,
)
from ...domains.spacetime import (
    EventSpec, SpacetimeConfig, classify_order, definite_future_threshold, light_coordinate_time,
    light_coordinate_time_quadrature, tau_star_threshold,
)
from ...utils.logging import log

CheckOutcome = Tuple[bool, str]


@dataclass
class CriterionResult:
    name: str
    passed: bool
    seconds: float
    detail: str


def _teleport_family(m: int, bob_dims: List[int], count: int, directions: Tuple[str, ...], tol: float) -> CheckOutcome:
    n = m * m
    worst_fidelity, worst_prob = 1.0, 0.0
    for k in range(count):
        state = random_state((m, bob_dims[k % len(bob_dims)]), seed=1000 * m + k)
        for direction in directions:
            result = teleport_mics(state, m, direction)
            worst_fidelity = min(worst_fidelity, result.min_branch_fidelity)
            worst_prob = max(worst_prob, max(abs(b.probability - 1.0 / n) for b in result.branches))
            if len(result.live_branches) != n:
                return False, f"{direction}: {n - len(result.live_branches)} null branches"
    ok = worst_fidelity >= 1.0 - tol and worst_prob <= tol
    return ok, f"min fidelity {worst_fidelity:.15f}, max |p - 1/{n}| {worst_prob:.1e}"


def check_teleport_2ics(tol: float) -> CheckOutcome:
    return _teleport_family(2, [2, 3, 5, 8], 200, ("forward",), tol)


def check_roundtrip(tol: float) -> CheckOutcome:
    worst = 1.0
    for k in range(50):
        result = roundtrip(random_state((2, 2 + k % 3), seed=5000 + k), 2)
        if len(result.live_branches) != 16:
            return False, f"state {k}: {len(result.live_branches)} live paths"
        worst = min(worst, result.min_branch_fidelity)
    return worst >= 1.0 - tol, f"min path fidelity {worst:.15f} over 16 paths"


def check_channel(tol: float) -> CheckOutcome:
    worst = 0.0
    for k in range(50):
        rho = random_density((2, 3), seed=7000 + k)
        channel = random_channel(6, 1 + k % 4, seed=8000 + k)
        worst = max(worst, trace_distance(implement_nonlocal_channel(rho, channel), apply_directly(rho, channel)))
    swap = KrausChannel.from_unitary(SWAP)
    swapped = implement_nonlocal_channel(PureState.basis_state((2, 2), (0, 1)).density(), swap)
    swap_error = trace_distance(swapped, PureState.basis_state((2, 2), (1, 0)).density())
    return worst < tol and swap_error < tol, f"max trace distance {worst:.1e}, SWAP error {swap_error:.1e}"


def check_bell(tol: float) -> CheckOutcome:
    rows = set()
    for secret in range(1, 5):
        result = bell_branches(secret)
        live = result.live_branches
        if any(b.extra["identified"] != secret for b in live):
            return False, f"B{secret} misidentified"
        if len({b.outcomes[0] for b in live}) != 1:
            return False, f"Charlie's outcome is not deterministic for B{secret}"
        if abs(sum(b.probability for b in live) - 1.0) > tol:
            return False, f"B{secret} probabilities do not sum to 1"
        rows.update((secret,) + b.outcomes for b in live)
    return len(rows) == 8, f"{len(rows)} table rows exercised"


def check_entangle(tol: float) -> CheckOutcome:
    zero = ket(2, 0)
    plus, minus = entangle_2ics(I2, SIGMA_X, zero, zero)
    generated = all(abs(o.probability - 0.5) <= tol and abs(o.entropy - 1.0) <= tol for o in (plus, minus))
    same_plus, same_minus = entangle_2ics(I2, I2, zero, zero)
    trivial = same_minus.is_null and abs(same_plus.probability - 1.0) <= tol and same_plus.entropy <= tol
    detail = f"entropies {plus.entropy:.12f}/{minus.entropy:.12f}, identical unitaries null: {same_minus.is_null}"
    return generated and trivial, detail


def check_smolin(tol: float) -> CheckOutcome:
    result = unlock_smolin()
    ppt = result.extra["ppt_min_eigenvalues"]["AB|DE"]
    ok = result.min_branch_fidelity >= 1.0 - tol and ppt >= -tol and result.extra["identified_all"]
    return ok, f"min fidelity {result.min_branch_fidelity:.15f}, min PT eigenvalue {ppt:.1e}"


def check_teleport_3ics(tol: float) -> CheckOutcome:
    return _teleport_family(3, [3, 5], 100, ("forward", "backward"), tol)


def check_teleport_4ics(tol: float) -> CheckOutcome:
    return _teleport_family(4, [4, 5], 100, ("forward", "backward"), tol)


def check_search(tol: float) -> CheckOutcome:
    details = []
    for m in (2, 3):
        found = search_corrections(m, ics_unitaries(m), standard_mass_basis(m), d=2)
        if not found.found:
            return False, f"m={m}: no correction for {found.failing}"
        if not found.table.matches(correction_table(m, "forward")):
            return False, f"m={m}: recovered table differs from the published one"
        details.append(f"m={m} recovered")
    degenerate = search_corrections(2, [I2, I2], standard_mass_basis(2), d=2)
    if degenerate.found:
        return False, "identical unitaries unexpectedly teleport"
    return True, ", ".join(details) + "; identical unitaries not-found"


def _random_config(rng: np.random.Generator) -> SpacetimeConfig:
    mass = rng.uniform(0.1, 2.0)
    radius = 2.0 * mass * rng.uniform(1.5, 20.0)
    return SpacetimeConfig(1.0, 1.0, mass, radius, radius * rng.uniform(0.01, 2.0))


def check_spacetime(tol: float) -> CheckOutcome:
    rng = np.random.default_rng(20240601)
    worst = 0.0
    for _ in range(100):
        cfg = _random_config(rng)
        closed = light_coordinate_time(cfg.R, cfg.R + cfg.h, cfg)
        worst = max(worst, abs(closed - light_coordinate_time_quadrature(cfg.R, cfg.R + cfg.h, cfg)) / closed)
    try:
        tau_star_threshold(SpacetimeConfig(1.0, 1.0, 0.0, 10.0, 1.0))
        return False, "M = 0 did not raise a divergent threshold"
    except DivergentThresholdError:
        pass

    flip = {"X_before_Y": "Y_before_X", "Y_before_X": "X_before_Y", "spacelike": "spacelike"}
    for _ in range(1000):
        cfg = _random_config(rng)
        ev1 = EventSpec(str(rng.choice(["A", "B"])), float(rng.uniform(0, 100)))
        ev2 = EventSpec(str(rng.choice(["A", "B"])), float(rng.uniform(0, 100)))
        near = str(rng.choice(["A", "B"]))
        there, back = classify_order(ev1, ev2, near, cfg), classify_order(ev2, ev1, near, cfg)
        if back.relation != flip[there.relation] or abs(there.margin + back.margin) > 1e-9:
            return False, f"classify_order is not antisymmetric for {ev1}, {ev2}"

    definite = True
    for _ in range(20):
        cfg = _random_config(rng)
        tau_star = tau_star_threshold(cfg)
        tilde = definite_future_threshold(tau_star, cfg)
        x, y = EventSpec("A", tau_star), EventSpec("B", tilde)
        definite &= all(classify_order(x, y, near, cfg).relation == "X_before_Y" for near in ("A", "B"))
    return worst < 1e-9 and definite, f"max relative light-time error {worst:.1e}"


def check_branch_engine(tol: float) -> CheckOutcome:
    worst_entry, worst_entropy = 0.0, 0.0
    for m in (2, 3, 4):
        strategy = ics_strategy(m, (0,), (1,))
        mass = MassRegister.uniform(m)
        for k in range(34):
            state = random_state((m, m, 2), seed=9000 + 100 * m + k)
            direct = run_superposed(mass, strategy, state).amps
            dense = controlled_unitary(strategy, state.dims).mat @ tensor(mass.state(), state).amps
            worst_entry = max(worst_entry, float(np.max(np.abs(direct - dense))))
            for trace in branch_entropy_trace(strategy, state, [0]):
                worst_entropy = max(worst_entropy, max(abs(v - trace[0]) for v in trace))
    ok = worst_entry < 1e-12 and worst_entropy <= tol
    return ok, f"max entry deviation {worst_entry:.1e}, max entropy drift {worst_entropy:.1e}"


def check_nlwe(tol: float) -> CheckOutcome:
    result = nlwe_result(load_corpus())
    ok = (result.extra["gram_deviation_before"] <= tol and result.extra["gram_deviation_after"] <= tol
          and abs(result.extra["success_probability"] - 1.0) <= tol)
    return ok, f"Gram deviation {result.extra['gram_deviation_after']:.1e}, success {result.extra['success_probability']:.12f}"


CRITERIA: List[Tuple[str, Callable[[float], CheckOutcome]]] = [
    ("teleport-2ics", check_teleport_2ics),
    ("teleport-roundtrip", check_roundtrip),
    ("channel", check_channel),
    ("bell", check_bell),
    ("entangle", check_entangle),
    ("smolin", check_smolin),
    ("teleport-3ics", check_teleport_3ics),
    ("teleport-4ics", check_teleport_4ics),
    ("search-corrections", check_search),
    ("spacetime", check_spacetime),
    ("branch-engine", check_branch_engine),
    ("nlwe", check_nlwe),
]


def _run_one(name: str, check: Callable[[float], CheckOutcome], tol: float) -> CriterionResult:
    started = time.perf_counter()
    try:
        passed, detail = check(tol)
    except Exception as e:
        # 记录详细错误
        error_details = io.StringIO()
        traceback.print_exc(file=error_details)
        log(error_details.getvalue(), level="error")
        passed, detail = False, f"{type(e).__name__}: {e}"
    return CriterionResult(name, bool(passed), time.perf_counter() - started, detail)


def run_acceptance_suite(name_filter: Optional[str] = None, workers: int = 4,
                         tol: float = TOLERANCE) -> List[CriterionResult]:
    """
    执行验收准则，按准则顺序返回结果

    Args:
        name_filter: 名称前缀，为空时执行全部
        workers: 线程数
        tol: 断言容差
    """
    selected = [(n, c) for n, c in CRITERIA if not name_filter or n.startswith(name_filter)]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        futures = [pool.submit(_run_one, n, c, tol) for n, c in selected]
        return [f.result() for f in futures]


def format_table(results: List[CriterionResult]) -> str:
    width = max([len(r.name) for r in results] + [9])
    lines = [f"{'criterion':<{width}}  status  seconds  detail"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name:<{width}}  {status:<6}  {r.seconds:7.2f}  {r.detail}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} criteria passed")
    return "\n".join(lines)


class AcceptanceWorkflow:
    """验收工作流"""

    def execute(self, name_filter: Optional[str] = None, workers: int = 4, tol: float = TOLERANCE) -> int:
        results = run_acceptance_suite(name_filter, workers, tol)
        if not results:
            log(f"No acceptance criterion matches {name_filter!r}", level="warning")
        print(format_table(results))
        failed = [r.name for r in results if not r.passed]
        if failed:
            log(f"Acceptance failures: {', '.join(failed)}", level="warning")
            return EXIT_CHECK_FAILED
        return EXIT_OK

