"""Plain-data renderings of verdicts, for JSON and text output.

Cones are written as lists of their primitive generators next to their ids,
so a report can be read without the id table.
"""

from __future__ import annotations

from .fan import EulerReport, Fan, SubfanRef
from .geometry import BoxSpec
from .homology import GradedDims
from .ring import (
    CMResult, DualityReport, EulerSelf, GorensteinWitness, GradedHilbertSlice, IdealSubfan, NoGradedEmbedding,
    NotGorenstein,
)
from .shelling import (
    CleanWitness, NotClean, NotSemishellable, NotShellable, OmegaStepReport, SemishellingCertificate,
    ShellingCertificate,
)


def cone_entry(fan: Fan, i: int) -> dict:
    return {"id": i, "rays": [list(g) for g in fan.cones[i].generators]}


def subfan_entry(sub: SubfanRef) -> dict:
    return {
        "cone_ids": sorted(sub.cone_ids),
        "facets": [cone_entry(sub.fan, i) for i in sub.facets],
    }


def fan_summary(fan: Fan) -> dict:
    return {
        "name": fan.name,
        "ambient_dim": fan.ambient_dim,
        "dim": fan.dim,
        "pure": fan.pure,
        "f_vector": fan.f_vector(),
        "facets": [cone_entry(fan, i) for i in fan.facets],
    }


def cone_table(fan: Fan) -> list[dict]:
    return [cone_entry(fan, i) for i in range(len(fan.cones))]


def graded(h: GradedDims) -> dict:
    return {"from_degree": h.start, "dims": list(h.dims)}


def hilbert_slice(s: GradedHilbertSlice) -> dict:
    return {
        "box": s.box.radius,
        "nonzero": [[list(a), v] for a, v in sorted(s.values.items()) if v],
    }


def cm(res: CMResult, fan: Fan) -> dict:
    if res:
        return {"verdict": "CohenMacaulay"}
    c, i = res.witness
    return {"verdict": "NotCohenMacaulay", "witness": {"cone": cone_entry(fan, c), "degree": i}}


def euler(rep: EulerReport) -> dict:
    out = {"verdict": "Euler" if rep else "NotEuler", "pure": rep.pure, "target": rep.target}
    if not rep and rep.pure:
        out["offending_cones"] = rep.offending
    return out


def gorenstein(res) -> dict:
    if isinstance(res, GorensteinWitness):
        return {"verdict": "Gorenstein", "sigma": list(res.sigma), "condition_i": res.condition_i_status}
    assert isinstance(res, NotGorenstein)
    out = {"verdict": "NotGorenstein", "reason": res.reason, "box_qualified": res.box_qualified}
    if res.box_qualified:
        out["box"] = res.box.radius
    return out


def canonical(res) -> dict:
    if isinstance(res, EulerSelf):
        return {"verdict": "EulerSelf"}
    if isinstance(res, IdealSubfan):
        return {"verdict": "IdealSubfan", "subfan": subfan_entry(res.subfan)}
    assert isinstance(res, NoGradedEmbedding)
    return {"verdict": "NoGradedEmbedding", "reason": res.reason}


def duality(rep: DualityReport) -> dict:
    out = {"applicable": rep.applicable}
    if not rep.applicable:
        out["reason"] = rep.reason
        return out
    out.update(
        boundary=subfan_entry(rep.boundary),
        manifold_like=rep.manifold_like,
        boundary_euler_and_cm=rep.boundary_euler_cm,
        canonical=canonical(rep.canonical),
        canonical_is_boundary_ideal=rep.canonical_is_boundary_ideal,
        agreement=rep.agreement,
        note=rep.heuristic_note,
    )
    return out


def shelling(res) -> dict:
    if isinstance(res, NotShellable):
        return {"verdict": "NotShellable", "reason": res.reason}
    assert isinstance(res, ShellingCertificate)
    return {
        "verdict": "Shellable",
        "facet_order": list(res.facet_order),
        "first_boundary_order": list(res.first_boundary),
        "steps": [
            {"cone": s.cone, "boundary_order": list(s.boundary_order), "r": s.r}
            for s in res.steps
        ],
    }


def semishelling(res) -> dict:
    if isinstance(res, NotSemishellable):
        return {"verdict": "NotSemishellable", "reason": res.reason}
    assert isinstance(res, SemishellingCertificate)
    return {
        "verdict": "Semishellable",
        "confidence": res.confidence,
        "facet_order": list(res.facet_order),
        "steps": [
            {"cone": s.cone, "kind": s.recognized.kind, "dim": s.recognized.dim,
             "confidence": s.recognized.confidence}
            for s in res.steps
        ],
    }


def clean(res, omega_steps: list[OmegaStepReport] | None = None) -> dict:
    if isinstance(res, NotClean):
        out = {"verdict": "NotClean", "reason": res.reason, "shellable": res.shellable,
               "box_qualified": res.box_qualified}
        if res.box_qualified:
            out["box"] = res.box.radius
        return out
    assert isinstance(res, CleanWitness)
    out = {
        "verdict": "Clean",
        "facet_order": list(res.facet_order),
        "gammas": [list(g) for g in res.gammas],
        "box": res.box.radius,
    }
    if omega_steps is not None:
        out["omega_steps"] = [
            {"step": s.step, "cone": s.cone, "empty": s.empty, "ok": s.ok}
            | ({} if s.empty else {"gorenstein": gorenstein(s.gorenstein), "boundary_matches": s.boundary_matches})
            for s in omega_steps
        ]
    return out


def unknown(reason: str) -> dict:
    return {"verdict": "Unknown", "reason": reason}


def caveat_for(label: str, box: BoxSpec) -> str:
    return f"{label}: lattice conditions verified on the box [-{box.radius},{box.radius}]^d only"


def render_text(doc, indent: int = 0) -> str:
    """Indented key: value listing of a report document."""
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, dict) and all(_flat(x) if isinstance(x, list) else not isinstance(x, dict)
                                           for x in v.values()):
                lines.append(f"{pad}- " + ", ".join(f"{k}: {_inline(x)}" for k, x in v.items()))
            elif isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(f"{pad}{_inline(doc)}")
    return "\n".join(lines)


def _flat(v) -> bool:
    if isinstance(v, dict):
        return False
    return all(not isinstance(x, dict) for x in v) and len(str(v)) < 80


def _inline(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)
