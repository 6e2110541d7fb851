"""
Randomized and grid searches for violations of Newton-type inequalities.

Under Condition C the inequalities are theorems, so a search there is
refused. Outside it, x vectors are drawn from per-sample SplitMix64
streams: sample i depends only on (seed, i), which keeps results identical
for any number of worker processes.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import RationalLike, format_rational
from .condition_c import check_condition_c
from .errors import FutileSearchError
from .inequalities import GapReport, newton_gap_S, q_gap
from .rng import SplitMix64
from .schema import GapForm, SearchConfig
from .symmfn import VariableVector, as_alpha, as_variables, q_values, s_values

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Witness:
    """An x with a strictly negative Newton gap."""

    x: VariableVector
    gap: Fraction
    form: GapForm
    index: int = 0

    def to_json(self) -> Dict[str, object]:
        return {
            "x": [format_rational(v) for v in self.x],
            "gap": format_rational(self.gap),
            "form": self.form.value,
        }

    def __str__(self) -> str:
        x = ", ".join(format_rational(v) for v in self.x)
        return f"x = ({x}): gap = {format_rational(self.gap)} (violated, {self.form.value}-form, sample {self.index})"


def newton_difference(
    x: Sequence[RationalLike], alpha: Sequence[RationalLike], k: int, form: GapForm
) -> Fraction:
    """T_k^2 - T_{k-1} T_{k+1} for T = S or Q, with no range or hypothesis checks."""
    values = s_values(x, alpha) if form == GapForm.S else q_values(x, alpha)
    return values[k] ** 2 - values[k - 1] * values[k + 1]


def sample_x(cfg: SearchConfig, index: int) -> VariableVector:
    """The x vector of sample ``index``: n independent draws from its own stream."""
    gen = SplitMix64.for_stream(cfg.seed, index)
    entries = []
    for _ in range(cfg.n):
        value, gen = gen.next_rational(cfg.numerator_bound, cfg.denominator_bound)
        entries.append(value)
    return tuple(entries)


def _scan_block(cfg: SearchConfig, start: int, stop: int) -> Optional[Witness]:
    alpha = as_alpha(cfg.alpha)
    for index in range(start, stop):
        x = sample_x(cfg, index)
        gap = newton_difference(x, alpha, cfg.k, cfg.target)
        if gap < 0:
            return Witness(x, gap, cfg.target, index)
    return None


def _blocks(samples: int, workers: int) -> List[Tuple[int, int]]:
    size, extra = divmod(samples, workers)
    bounds, start = [], 0
    for w in range(workers):
        stop = start + size + (1 if w < extra else 0)
        if stop > start:
            bounds.append((start, stop))
        start = stop
    return bounds


def find_counterexample(cfg: SearchConfig, workers: int = 1) -> Optional[Witness]:
    """Search ``cfg.samples`` random x for a negative gap.

    The witness with the smallest sample index is returned, whatever the
    number of workers. None means the budget ran out.

    Raises:
        FutileSearchError: If alpha satisfies Condition C
    """
    if check_condition_c(cfg.alpha).holds:
        raise FutileSearchError(
            "condition-c",
            "alpha satisfies Condition C, where the Newton inequalities for S and Q are theorems; no counterexample exists",
        )
    logger.info(
        f"Searching {cfg.samples} samples for a {cfg.target.value}-form violation "
        f"(n = {cfg.n}, k = {cfg.k}, seed = {cfg.seed}, workers = {workers})"
    )
    if workers <= 1:
        witness = _scan_block(cfg, 0, cfg.samples)
    else:
        blocks = _blocks(cfg.samples, workers)
        with Pool(processes=min(workers, len(blocks))) as pool:
            found = pool.starmap(partial(_scan_block, cfg), blocks)
        # blocks are contiguous and ordered, so the first hit has the smallest index
        witness = next((w for w in found if w is not None), None)
    if witness is None:
        logger.info("No violation found within the sample budget")
    else:
        logger.info(f"Violation at sample {witness.index}: gap = {format_rational(witness.gap)}")
    return witness


def verify_witness(witness: Witness, alpha: Sequence[RationalLike], k: int) -> bool:
    """Recompute the gap from scratch and confirm it matches and is negative."""
    gap = newton_difference(as_variables(witness.x), as_alpha(alpha), k, witness.form)
    return gap == witness.gap and gap < 0


def _evaluate(alpha: Tuple[Fraction, ...], k: int, form: GapForm, x: VariableVector) -> GapReport:
    if form == GapForm.S:
        return newton_gap_S(x, alpha, k)
    return q_gap(x, alpha, k)


def sweep_gap(
    alpha: Sequence[RationalLike],
    k: int,
    grid: Sequence[Sequence[RationalLike]],
    form: GapForm = GapForm.Q,
    workers: int = 1,
) -> List[GapReport]:
    """Evaluate the chosen gap on every grid point, preserving grid order."""
    coefficients = as_alpha(alpha)
    points = [as_variables(x) for x in grid]
    evaluate = partial(_evaluate, coefficients, k, form)
    if workers <= 1 or len(points) < 2:
        return [evaluate(x) for x in points]
    with Pool(processes=workers) as pool:
        return pool.map(evaluate, points)
