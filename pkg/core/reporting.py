"""
Report documents and their rendering.

Every command builds one JSON-ready document (dicts, lists, strings, numbers,
booleans). The machine format is that document as sorted, indented JSON, so
identical inputs give byte-identical output. The human format walks the same
document and prints it as titled sections.
"""

import json


def machine(document):
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def human(title, document):
    """Plain-text rendering: a banner, then one line or section per key."""
    lines = ["=" * 80, title, "=" * 80]
    for key in sorted(document):
        _render(lines, key, document[key], 0)
    return "\n".join(lines) + "\n"


def _render(lines, key, value, depth):
    pad = "  " * depth
    if isinstance(value, dict):
        lines.append(f"{pad}{key}:")
        if depth == 0:
            lines.append("-" * 50)
        for inner in sorted(value):
            _render(lines, inner, value[inner], depth + 1)
    elif isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value):
        lines.append(f"{pad}{key}: ({len(value)})")
        for item in value:
            if isinstance(item, dict):
                summary = ", ".join(f"{k}={_scalar(item[k])}" for k in sorted(item))
                lines.append(f"{pad}  - {summary}")
            else:
                lines.append(f"{pad}  - {_scalar(item)}")
    else:
        lines.append(f"{pad}{key}: {_scalar(value)}")


def _scalar(value):
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_scalar(value[k])}" for k in sorted(value)) + "}"
    return str(value)


def render(title, document, output_format):
    return machine(document) if output_format == "machine" else human(title, document)


# ---------------------------------------------------------------------------
# Documents

def texts(formulas):
    return [str(f) for f in formulas]


def entailment_document(gamma, formula, verdict, universe):
    return {
        "command": "fml entails",
        "mu": universe.mu,
        "hypotheses": texts(gamma),
        "conclusion": str(formula),
        "passed": verdict.holds,
        "countermodel": None if verdict.countermodel is None else verdict.countermodel.to_list(),
    }


def evaluation_document(formulas, valuation, values):
    return {
        "command": "fml eval",
        "mu": valuation.mu,
        "valuation": valuation.to_list(),
        "results": [{"formula": str(f), "value": v} for f, v in zip(formulas, values)],
        "passed": all(values),
    }


def fragment_document(fragment, universe):
    return {
        "command": "fml fragment",
        "mu": universe.mu,
        "size": len(fragment),
        "truncated": fragment.truncated,
        "formulas": texts(fragment),
        "passed": True,
    }


def proof_check_document(report, audit_path, universe, hypotheses):
    path, reason = report.failure if report.failure else (None, None)
    return {
        "command": "proof check",
        "mu": universe.mu,
        "hypotheses": texts(hypotheses),
        "accepted": report.accepted,
        "conclusion": None if report.conclusion is None else str(report.conclusion),
        "failure": None if path is None else {"path": list(path), "reason": reason},
        "soundness_violation": None if audit_path is None else list(audit_path),
        "passed": report.accepted and audit_path is None,
    }


def proof_sample_document(seed, rows):
    """rows: dicts with index, mu, size, accepted, sound."""
    failures = [row for row in rows if not (row["accepted"] and row["sound"])]
    return {
        "command": "proof sample",
        "seed": seed,
        "count": len(rows),
        "accepted": sum(1 for row in rows if row["accepted"]),
        "sound": sum(1 for row in rows if row["sound"]),
        "failures": failures,
        "passed": not failures,
    }


def covering_document(report):
    return {
        "checked": report.checked,
        "passed": report.passed,
        "violations": [
            {"kind": v.kind, "gamma": texts(v.gamma), "detail": v.detail} for v in report.violations
        ],
    }


def claim_document(claim):
    return {
        "title": claim.title,
        "passed": claim.passed,
        "checked": claim.checked,
        "witness": None if claim.witness is None else list(claim.witness),
        "note": claim.note,
    }


def pipeline_document(result):
    poset = result.poset
    report = result.report
    return {
        "command": "buk run",
        "config": result.config.to_dict(),
        "checked_family": report.checked_family,
        "fragment": {"size": len(result.fragment), "truncated": result.fragment.truncated},
        "covering": covering_document(result.covering_report),
        "theory_size": len(result.theory),
        "poset": {
            "members": len(poset.members),
            "classes": len(poset.quotient.classes),
            "theory_models": [
                int(i) for i in range(poset.table.size) if poset.theory_models[i]
            ],
        },
        "generic": list(report.generic),
        "claims": {claim.key: claim_document(claim) for claim in report.claims},
        "passed": result.passed,
    }


def antichain_document(result):
    return {"size": result.size, "witness": list(result.witness), "labels": [str(x) for x in result.labels]}


def fn_document(fn, antichain, bound, compatibility_agrees):
    return {
        "command": "poset fn",
        "kappa": fn.kappa,
        "lambda": fn.lam,
        "mu": fn.mu,
        "elements": len(fn.functions),
        "max_antichain": antichain_document(antichain),
        "antichain_bound": bound,
        "within_bound": antichain.size <= bound,
        "compatibility_agrees": compatibility_agrees,
        "passed": antichain.size <= bound and compatibility_agrees,
    }


def analyze_document(preorder, antichain, classes, atomless, minimal):
    return {
        "command": "poset analyze",
        "elements": len(preorder),
        "labels": [str(x) for x in preorder.labels],
        "max_antichain": antichain_document(antichain),
        "classes": [[str(preorder.labels[i]) for i in members] for members in classes.classes],
        "atomless": atomless,
        "minimal_elements": [str(preorder.labels[i]) for i in minimal],
        "passed": True,
    }


def frame_document(frame, labeling):
    return {
        "worlds": len(frame),
        "world_names": [str(w) for w in frame.worlds],
        "pairs": int(frame.relation.sum()),
        "buttons": labeling.n_buttons,
        "switches": labeling.n_switches,
        "directed": frame.is_directed(),
    }


def independence_document(report):
    return {
        "passed": report.passed,
        "counterexample": (
            None
            if report.counterexample is None
            else {"world": report.counterexample[0], "target": list(report.counterexample[1])}
        ),
        "reason": report.reason,
    }


def s42_document(report):
    return {
        "reflexive": report.reflexive,
        "transitive": report.transitive,
        "directed": report.directed,
        "letter_cap": report.letter_cap,
        "passed": report.passed,
        "axioms": {
            check.name: {
                "formula": check.formula,
                "checked": check.checked,
                "valid": check.valid,
                "labelings": check.labelings,
                "witness": check.witness,
            }
            for check in report.axioms
        },
    }
