"""Problem-document parsing and serialization.

A document is a JSON object:

    {
      "quiver": {"vertices": ["v"],
                 "arrows": [{"id": "d", "src": "v", "tgt": "v"}, ...]},
      "parameters": ["a", "b", "g"],
      "order": {"arrow_order": ["d", "u"], "weights": {"d": 1, "u": 1}},
      "rules": [{"lhs": "ddu",
                 "rhs": [{"coef": "a", "path": "dud"}, ...]}, ...]
      -- or --
      "generators": [[{"coef": "1", "path": "xxx"}, ...], ...]
    }

Paths are concatenated arrow ids in written order ("ddu" is d·d·u) with
trivial paths spelled "e:<vertex>"; coefficients use the scalar grammar of
the coefficient field.  Exactly one of "rules"/"generators" must be given.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .fields import Field
from .order import WeightedDeglex
from .quiver import PathPoly, Quiver
from .rewrite import ReductionSystem


@dataclass
class ProblemDocument:
    field: Field
    quiver: Quiver
    order: object                      # WeightedDeglex or None
    system: object                     # ReductionSystem or None
    generators: list                   # list of PathPoly (may be empty)
    raw: dict


def _parse_poly(field, quiver, items):
    return PathPoly.from_terms(
        field, [(quiver.parse_path(t["path"]), field.parse(t["coef"]))
                for t in items])


def parse_document(doc):
    if not isinstance(doc, dict) or "quiver" not in doc:
        raise InputError("document must be an object with a 'quiver' key")
    qspec = doc["quiver"]
    try:
        quiver = Quiver(qspec["vertices"],
                        [(a["id"], a["src"], a["tgt"])
                         for a in qspec["arrows"]])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed quiver description: {exc}") from exc
    field = Field(tuple(doc.get("parameters", ())))
    order = None
    if doc.get("order"):
        ospec = doc["order"]
        order = WeightedDeglex(quiver, ospec["arrow_order"],
                               ospec.get("weights"))
    has_rules = "rules" in doc
    has_gens = "generators" in doc
    if has_rules == has_gens:
        raise InputError(
            "exactly one of 'rules' and 'generators' must be present")
    system = None
    generators = []
    if has_rules:
        pairs = []
        for r in doc["rules"]:
            lhs = quiver.parse_path(r["lhs"])
            rhs = _parse_poly(field, quiver, r.get("rhs", []))
            pairs.append((lhs, rhs))
        system = ReductionSystem(field, quiver, pairs)
    else:
        generators = [_parse_poly(field, quiver, g)
                      for g in doc["generators"]]
        if order is None:
            raise InputError("completion from generators needs an 'order'")
    return ProblemDocument(field, quiver, order, system, generators, doc)


def poly_json(field, quiver, poly):
    return [{"coef": field.to_text(c), "path": quiver.path_str(p)}
            for p, c in poly.items_sorted()]


def system_json(system):
    return [{"lhs": system.quiver.path_str(r.tip),
             "rhs": poly_json(system.field, system.quiver, r.rhs)}
            for r in system.rules]


def serialize_document(pd):
    out = {
        "quiver": {
            "vertices": list(pd.quiver.vertices),
            "arrows": [
                {"id": a,
                 "src": pd.quiver.vertices[pd.quiver.arrow_source[i]],
                 "tgt": pd.quiver.vertices[pd.quiver.arrow_target[i]]}
                for i, a in enumerate(pd.quiver.arrow_ids)],
        },
        "parameters": list(pd.field.params),
    }
    if pd.order is not None:
        out["order"] = {"arrow_order": list(pd.order.arrow_order),
                        "weights": {a: pd.order.weights[a]
                                    for a in pd.order.arrow_order}}
    if pd.system is not None:
        out["rules"] = system_json(pd.system)
    else:
        out["generators"] = [poly_json(pd.field, pd.quiver, g)
                             for g in pd.generators]
    return out


def document_for_example(ex):
    pd = ProblemDocument(ex.field, ex.quiver, ex.order, ex.system, [], {})
    return serialize_document(pd)


def tensor_json(field, quiver, tensor):
    return [{"coef": field.to_text(c), "left": quiver.path_str(l),
             "gen": quiver.path_str(q), "right": quiver.path_str(r)}
            for (l, q, r), c in tensor.items_sorted()]


def word_latex(quiver, p):
    if p.is_trivial:
        return f"e_{{{quiver.vertices[p.source]}}}"
    out = []
    word = [quiver.arrow_ids[i] for i in p.word]
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        out.append(word[i] if j - i == 1 else f"{word[i]}^{{{j-i}}}")
        i = j
    return "".join(out)


def tensor_latex(field, quiver, tensor):
    parts = []
    for (l, q, r), c in tensor.items_sorted():
        coef = field.to_text(c)
        body = (f"{word_latex(quiver, l)} \\otimes {word_latex(quiver, q)}"
                f" \\otimes {word_latex(quiver, r)}")
        if coef == "1":
            parts.append(f"+ {body}")
        elif coef == "-1":
            parts.append(f"- {body}")
        else:
            parts.append(f"+ \\left({coef}\\right) {body}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else text
