"""MUC-style scoring of model identification and case-role filling.

Model identification is a plain correct/incorrect task.  Role filling
distinguishes correct, incorrect (right slot, wrong role), spurious
(slot not in the key) and missing fills, and derives undergeneration,
overgeneration, substitution, error rate, precision, recall and three
F-measures from them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

#: Predicted model value meaning "no frame chosen"; such verbs count as
#: unassigned (they stay in the possible pool but not in the actual one).
UNASSIGNED = "NONE"


@dataclass(frozen=True)
class SentenceAnnotation:
    """Gold or predicted annotation of one sentence: the model chosen for
    each verbal chunk plus the role fills (dependent, role, governor)."""

    id: str
    verb_models: Mapping[int, str]
    fills: tuple[tuple[int, str, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "verb_models", dict(self.verb_models))
        object.__setattr__(
            self, "fills",
            tuple((int(d), str(r), int(g)) for d, r, g in self.fills),
        )


class ModelScore(NamedTuple):
    cor: int
    inc: int
    pos: int
    precision: float | None
    recall: float | None


@dataclass(frozen=True)
class RoleCounts:
    cor: int
    inc: int
    mis: int
    spu: int

    @property
    def pos(self) -> int:
        return self.cor + self.inc + self.mis

    @property
    def act(self) -> int:
        return self.cor + self.inc + self.spu


@dataclass(frozen=True)
class ScoreReport:
    """Role-filling counts and derived measures, unrounded percentages.

    A measure is None when its denominator is zero.
    """

    counts: RoleCounts
    und: float | None
    ovr: float | None
    sub: float | None
    err: float | None
    pre: float | None
    rec: float | None
    f_pr: float | None
    f_2pr: float | None
    f_p2r: float | None

    def rounded(self) -> dict:
        out = {}
        for name in ("und", "ovr", "sub", "err", "pre", "rec",
                     "f_pr", "f_2pr", "f_p2r"):
            out[name] = round_half_up(getattr(self, name))
        return out


def round_half_up(value: float | None) -> int | None:
    if value is None:
        return None
    return int(math.floor(value + 0.5))


def _ratio(numerator: int, denominator: int) -> float | None:
    if denominator == 0:
        return None
    return 100.0 * numerator / denominator


def f_measure(precision: float | None, recall: float | None,
              beta: float) -> float | None:
    """F_beta = (beta^2 + 1) P R / (beta^2 P + R), on percentages."""
    if precision is None or recall is None:
        return None
    denominator = beta * beta * precision + recall
    if denominator == 0:
        return None
    return (beta * beta + 1) * precision * recall / denominator


def _align(gold: Iterable[SentenceAnnotation],
           predicted: Iterable[SentenceAnnotation]):
    gold = list(gold)
    predicted = list(predicted)
    gold_by_id = {g.id: g for g in gold}
    pred_by_id = {p.id: p for p in predicted}
    if len(gold_by_id) != len(gold) or len(pred_by_id) != len(predicted):
        raise ValueError("duplicate sentence ids in annotations")
    if set(gold_by_id) != set(pred_by_id):
        missing = set(gold_by_id) ^ set(pred_by_id)
        raise ValueError(
            f"gold and predicted sentence sets differ on ids {sorted(missing)}"
        )
    return [(gold_by_id[i], pred_by_id[i]) for i in sorted(gold_by_id)]


def score_models(gold, predicted) -> ModelScore:
    """Verbal model identification: precision over assigned verbs, recall
    over all gold verbs.  A prediction of NONE (or no prediction at all)
    counts as unassigned."""
    cor = inc = pos = 0
    for g, p in _align(gold, predicted):
        for chunk, gold_model in g.verb_models.items():
            pos += 1
            chosen = p.verb_models.get(chunk, UNASSIGNED)
            if chosen == UNASSIGNED:
                continue
            if chosen == gold_model:
                cor += 1
            else:
                inc += 1
    return ModelScore(cor, inc, pos, _ratio(cor, cor + inc), _ratio(cor, pos))


def count_roles(gold, predicted) -> RoleCounts:
    """Classify every fill.  A predicted fill is correct when the triple
    is in the key, incorrect when the key fills the same slot (dependent,
    governor) with another role, and spurious otherwise.  Key fills left
    unaccounted are missing."""
    cor = inc = spu = pos = 0
    for g, p in _align(gold, predicted):
        slots = {}
        for d, r, gov in p.fills:
            if (d, gov) in slots:
                raise ValueError(
                    f"sentence {p.id!r}: duplicate predicted fill for "
                    f"dependent {d} under governor {gov}"
                )
            slots[(d, gov)] = r
        gold_fills = set(g.fills)
        gold_slots = {(d, gov) for d, _, gov in gold_fills}
        pos += len(g.fills)
        for (d, gov), r in slots.items():
            if (d, r, gov) in gold_fills:
                cor += 1
            elif (d, gov) in gold_slots:
                inc += 1
            else:
                spu += 1
    return RoleCounts(cor=cor, inc=inc, mis=pos - cor - inc, spu=spu)


def report_from_counts(counts: RoleCounts) -> ScoreReport:
    pre = _ratio(counts.cor, counts.act)
    rec = _ratio(counts.cor, counts.pos)
    return ScoreReport(
        counts=counts,
        und=_ratio(counts.mis, counts.pos),
        ovr=_ratio(counts.spu, counts.act),
        sub=_ratio(counts.inc, counts.cor + counts.inc),
        err=_ratio(counts.inc + counts.spu + counts.mis,
                   counts.cor + counts.inc + counts.spu + counts.mis),
        pre=pre,
        rec=rec,
        f_pr=f_measure(pre, rec, 1.0),
        f_2pr=f_measure(pre, rec, 2.0),
        f_p2r=f_measure(pre, rec, 0.5),
    )


def score_roles(gold, predicted) -> ScoreReport:
    return report_from_counts(count_roles(gold, predicted))


def _cell(value: int | None) -> str:
    return "--" if value is None else f"{value}%"


def render_report(models: ModelScore, roles: ScoreReport) -> str:
    """Human-readable report with the model identification row and the
    role filling rows."""
    m_pre = round_half_up(models.precision)
    m_rec = round_half_up(models.recall)
    r = roles.rounded()
    c = roles.counts
    lines = [
        "Verbal model identification",
        "  COR   INC   POS   PRE   REC",
        f"  {models.cor:<5d} {models.inc:<5d} {models.pos:<5d}"
        f" {_cell(m_pre):<5s} {_cell(m_rec):<5s}",
        "",
        "Case-role filling",
        "  COR   INC   MIS   SPU   POS   ACT",
        f"  {c.cor:<5d} {c.inc:<5d} {c.mis:<5d} {c.spu:<5d} {c.pos:<5d} {c.act:<5d}",
        "  UND   OVR   SUB   ERR   PRE   REC",
        f"  {_cell(r['und']):<5s} {_cell(r['ovr']):<5s} {_cell(r['sub']):<5s}"
        f" {_cell(r['err']):<5s} {_cell(r['pre']):<5s} {_cell(r['rec']):<5s}",
        "  P&R   2P&R  P&2R",
        f"  {_cell(r['f_pr']):<5s} {_cell(r['f_2pr']):<5s} {_cell(r['f_p2r']):<5s}",
    ]
    return "\n".join(lines) + "\n"
