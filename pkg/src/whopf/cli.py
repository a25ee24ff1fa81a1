"""Command line front end: ``whopf <command> --input doc.json``.

Exit codes: 0 every task passed, 1 some task failed, 2 the input did not
parse or validate, 3 an exhaustive search exceeded --max-enum.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field as dc_field

from .cleft2cross import (check_equivalence, equivalence_to_iso, roundtrip_cleft, roundtrip_crossed,
                          search_equivalence)
from .cohom import verify_h2_bijection
from .comodule import (ComoduleAlgebra, coinvariants, identity_integral, is_cleft, self_comodule, totalize,
                       verify_comodule_algebra, verify_entwining)
from .crossed import (CrossedSystem, build_crossed_product, crossed_product_cleft, is_crossed_system,
                      special_case_checks, verify_crossed_system)
from .enumerate import DEFAULT_MAX_ENUM, SearchSpaceTooLarge
from .field import GF, Q, Field, WhopfError
from .linmap import K, LinMap, image, make_space, tensor_space
from .maction import WeakModuleAlgebra, omega_report, trivial_action
from .report import Report
from .structure import (Algebra, Coalgebra, Groupoid, WeakHopfAlgebra, algebra_from_constants, antipode_properties,
                        base_algebra, cyclic_group, groupoid_algebra, matrix_algebra, small_groupoids,
                        verify_projection_identities, verify_weak_hopf)

COMMANDS = ("verify", "groupoid", "comodule", "cleft", "crossed", "roundtrip", "equiv", "h2")


class InputError(WhopfError):
    def __init__(self, where: str, msg: str):
        super().__init__(f"{where}: {msg}")
        self.where = where


# parsing

def _field(d, where="field") -> Field:
    if d == "Q" or (isinstance(d, dict) and d.get("kind") in ("Q", "rational")):
        return Q
    if isinstance(d, str) and d.startswith("GF(") and d.endswith(")"):
        d = {"kind": "GF", "p": d[3:-1]}
    if isinstance(d, dict) and d.get("kind") == "GF":
        try:
            return GF(int(d["p"]))
        except (KeyError, ValueError, WhopfError) as e:
            raise InputError(where, f"bad prime: {e}") from None
    raise InputError(where, f"expected 'Q', 'GF(p)' or {{'kind': 'GF', 'p': p}}, got {d!r}")


def _scalar(F: Field, x, where):
    if F.kind == "GF" and not isinstance(x, int):
        raise InputError(where, f"scalars over {F} are integers, got {x!r}")
    if F.kind == "Q" and not isinstance(x, (int, str)):
        raise InputError(where, f"rational scalars are integers or 'a/b' strings, got {x!r}")
    try:
        return F.canon(x)
    except (ValueError, ZeroDivisionError, WhopfError) as e:
        raise InputError(where, f"bad scalar {x!r}: {e}") from None


def _labels(d, key, where) -> list:
    labs = d.get(key)
    if not isinstance(labs, list) or not labs or not all(isinstance(x, str) for x in labs):
        raise InputError(f"{where}.{key}", "expected a non-empty list of label strings")
    if len(set(labs)) != len(labs):
        raise InputError(f"{where}.{key}", "repeated labels")
    return labs


def _entries(F, d, key, where, spaces) -> list:
    """Rows [label_1, ..., label_n, scalar] with label_i drawn from spaces[i]."""
    rows = d.get(key)
    if not isinstance(rows, list):
        raise InputError(f"{where}.{key}", "expected a list of entries")
    out = []
    for k, row in enumerate(rows):
        loc = f"{where}.{key}[{k}]"
        if not isinstance(row, list) or len(row) != len(spaces) + 1:
            raise InputError(loc, f"expected {len(spaces)} labels and a scalar")
        for lab, basis in zip(row[:-1], spaces):
            if lab not in basis:
                raise InputError(loc, f"unknown label {lab!r}")
        out.append(tuple(row[:-1]) + (_scalar(F, row[-1], loc),))
    return out


def _map(F, dom, cod, triples) -> LinMap:
    return LinMap.from_entries(dom, cod, triples, F)


def _groupoid(name, d, where) -> Groupoid:
    if not isinstance(d, dict):
        raise InputError(where, "expected an object")
    if "builtin" in d:
        known = {G.name: G for G in small_groupoids()}
        if d["builtin"] not in known:
            raise InputError(f"{where}.builtin", f"unknown groupoid {d['builtin']!r}; known: {', '.join(known)}")
        G = known[d["builtin"]]
        return Groupoid(name, G.objects, G.morphisms, G.comp, G.inv)
    if "cyclic" in d:
        n = d["cyclic"]
        if not isinstance(n, int) or n < 1:
            raise InputError(f"{where}.cyclic", "expected a positive integer")
        return cyclic_group(n, name=name)
    try:
        G = Groupoid.from_json(name, d)
        G.validate()
    except WhopfError as e:
        raise InputError(where, str(e)) from None
    return G


@dataclass
class Document:
    field: Field
    groupoids: dict = dc_field(default_factory=dict)
    structures: dict = dc_field(default_factory=dict)
    tasks: list = dc_field(default_factory=list)


def _weak_hopf(F, name, d, doc, where) -> WeakHopfAlgebra:
    if "groupoid" in d:
        g = d["groupoid"]
        if g not in doc.groupoids:
            raise InputError(f"{where}.groupoid", f"unknown groupoid {g!r}")
        H = groupoid_algebra(doc.groupoids[g], F)
        H.name = name
        return H
    basis = _labels(d, "basis", where)
    V = make_space(basis, name)
    VV = tensor_space(V, V)
    mult = _entries(F, d, "mult", where, [basis, basis, basis])
    unit = _entries(F, d, "unit", where, [basis])
    comult = _entries(F, d, "comult", where, [basis, basis, basis])
    counit = _entries(F, d, "counit", where, [basis])
    anti = _entries(F, d, "antipode", where, [basis, basis])
    alg = Algebra(V, _map(F, VV, V, [(f"{x}⊗{y}", z, c) for x, y, z, c in mult]),
                  _map(F, K, V, [("1", z, c) for z, c in unit]), name)
    coalg = Coalgebra(V, _map(F, V, VV, [(x, f"{y}⊗{z}", c) for x, y, z, c in comult]),
                      _map(F, V, K, [(x, "1", c) for x, c in counit]), name)
    return WeakHopfAlgebra(alg, coalg, _map(F, V, V, [(x, y, c) for x, y, c in anti]), name)


def _algebra(F, name, d, where) -> Algebra:
    if d.get("base"):
        return base_algebra(F)
    if "matrix" in d:
        n = d["matrix"]
        if not isinstance(n, int) or not 1 <= n <= 4:
            raise InputError(f"{where}.matrix", "expected a size between 1 and 4")
        return matrix_algebra(n, F)
    basis = _labels(d, "basis", where)
    mult = _entries(F, d, "mult", where, [basis, basis, basis])
    unit = _entries(F, d, "unit", where, [basis])
    return algebra_from_constants(name, F, basis, mult, unit)


def _ref(doc, d, key, kind, where):
    name = d.get(key)
    obj = doc.structures.get(name)
    if obj is None or not isinstance(obj, kind):
        raise InputError(f"{where}.{key}", f"{name!r} is not a previously declared {kind.__name__}")
    return obj


def _comodule(F, name, d, doc, where) -> ComoduleAlgebra:
    H = _ref(doc, d, "hopf", WeakHopfAlgebra, where)
    if d.get("self"):
        CA = self_comodule(H)
        CA.name = name
        return CA
    A = _ref(doc, d, "algebra", Algebra, where)
    ent = _entries(F, d, "coaction", where, [A.space.basis, A.space.basis, H.space.basis])
    rho = _map(F, A.space, tensor_space(A.space, H.space), [(a, f"{b}⊗{h}", c) for a, b, h, c in ent])
    return ComoduleAlgebra(H, A, rho, name)


def _crossed(F, name, d, doc, where) -> CrossedSystem:
    H = _ref(doc, d, "hopf", WeakHopfAlgebra, where)
    A = _ref(doc, d, "algebra", Algebra, where)
    hb, ab = H.space.basis, A.space.basis
    if d.get("action", "trivial") == "trivial":
        M = trivial_action(H, A)
    else:
        ent = _entries(F, d, "action", where, [hb, ab, ab])
        M = WeakModuleAlgebra(H, A, _map(F, tensor_space(H.space, A.space), A.space,
                                         [(f"{h}⊗{a}", b, c) for h, a, b, c in ent]), name)
    if d.get("cocycle", "u2") == "u2":
        return CrossedSystem(M, M.u2, name)
    ent = _entries(F, d, "cocycle", where, [hb, hb, ab])
    return CrossedSystem(M, _map(F, H.power_space(2), A.space, [(f"{x}⊗{y}", a, c) for x, y, a, c in ent]), name)


_KINDS = {"weak_hopf", "algebra", "comodule", "crossed"}


def parse_document(raw) -> Document:
    if not isinstance(raw, dict):
        raise InputError("$", "expected a JSON object")
    if "field" not in raw:
        raise InputError("field", "missing")
    doc = Document(_field(raw["field"]))
    F = doc.field
    for name, d in (raw.get("groupoids") or {}).items():
        doc.groupoids[name] = _groupoid(name, d, f"groupoids.{name}")
    structures = raw.get("structures") or {}
    if not isinstance(structures, dict):
        raise InputError("structures", "expected an object")
    for name, d in structures.items():
        where = f"structures.{name}"
        if not isinstance(d, dict):
            raise InputError(where, "expected an object")
        kind = d.get("kind")
        if kind not in _KINDS:
            raise InputError(f"{where}.kind", f"expected one of {sorted(_KINDS)}, got {kind!r}")
        try:
            if kind == "weak_hopf":
                obj = _weak_hopf(F, name, d, doc, where)
            elif kind == "algebra":
                obj = _algebra(F, name, d, where)
            elif kind == "comodule":
                obj = _comodule(F, name, d, doc, where)
            else:
                obj = _crossed(F, name, d, doc, where)
        except InputError:
            raise
        except WhopfError as e:
            raise InputError(where, str(e)) from None
        doc.structures[name] = obj
    tasks = raw.get("tasks") or []
    if not isinstance(tasks, list):
        raise InputError("tasks", "expected a list")
    for k, t in enumerate(tasks):
        where = f"tasks[{k}]"
        if not isinstance(t, dict) or t.get("op") not in COMMANDS:
            raise InputError(f"{where}.op", f"expected one of {', '.join(COMMANDS)}")
        args = t.get("args") or {}
        if not isinstance(args, dict):
            raise InputError(f"{where}.args", "expected an object")
        doc.tasks.append({"op": t["op"], "name": t.get("name") or f"{t['op']}-{k}", "args": args, "where": where})
    return doc


def load_document(path: str) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as e:
        raise InputError(path, f"cannot read: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}:{e.lineno}:{e.colno}", e.msg) from None
    return parse_document(raw)


# tasks

@dataclass
class TaskResult:
    name: str
    op: str
    report: Report
    info: dict = dc_field(default_factory=dict)
    lines: list = dc_field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self, timing: bool) -> dict:
        d = {"name": self.name, "op": self.op, "status": "pass" if self.passed else "fail",
             "checks": [c.to_dict() for c in self.report.checks], "info": self.info}
        if timing:
            d["seconds"] = round(self.seconds, 3)
        return d


def _arg(doc, task, key, kind):
    return _ref(doc, task["args"], key, kind, f"{task['where']}.args")


def _witness(doc, task, lhs: CrossedSystem):
    ent = _entries(doc.field, task["args"], "witness", f"{task['where']}.args",
                   [lhs.H.space.basis, lhs.A.space.basis])
    return _map(doc.field, lhs.H.space, lhs.A.space, ent)


def task_verify(doc, task, opts):
    H = _arg(doc, task, "structure", WeakHopfAlgebra)
    rep = Report(f"verify {H.name}")
    rep.extend(verify_weak_hopf(H))
    rep.extend(verify_projection_identities(H))
    rep.extend(antipode_properties(H))
    return rep, {"dimension": H.dim, "cocommutative": H.is_cocommutative()}, []


def task_groupoid(doc, task, opts):
    name = task["args"].get("groupoid")
    if name not in doc.groupoids:
        raise InputError(f"{task['where']}.args.groupoid", f"unknown groupoid {name!r}")
    G = doc.groupoids[name]
    H = groupoid_algebra(G, doc.field)
    rep = Report(f"groupoid {name}")
    rep.extend(verify_weak_hopf(H))
    rep.extend(verify_projection_identities(H))
    rep.extend(omega_report(H))
    info = {"objects": len(G.objects), "morphisms": len(G.morphisms), "target_subalgebra_dim": image(H.piL).inj.dom.dim,
            "hopf": H.is_hopf()}
    return rep, info, [f"objects: {info['objects']}, morphisms: {info['morphisms']}",
                       f"dim of the image of the target projection: {info['target_subalgebra_dim']}"]


def task_comodule(doc, task, opts):
    CA = _arg(doc, task, "structure", ComoduleAlgebra)
    rep = Report(f"comodule {CA.name}")
    rep.extend(verify_comodule_algebra(CA))
    rep.extend(verify_entwining(CA))
    co = coinvariants(CA)
    return rep, {"coinvariants_dim": co.space.dim}, [f"coinvariants: dim {co.space.dim}"]


def _integral(doc, task, CA):
    args = task["args"]
    if "integral" in args:
        ent = _entries(doc.field, args, "integral", f"{task['where']}.args", [CA.H.space.basis, CA.A.space.basis])
        return _map(doc.field, CA.H.space, CA.A.space, ent), None
    if CA.A is CA.H.algebra or CA.A.space == CA.H.space:
        return identity_integral(CA.H)
    raise InputError(f"{task['where']}.args.integral", "required unless the comodule is H over itself")


def task_cleft(doc, task, opts):
    CA = _arg(doc, task, "structure", ComoduleAlgebra)
    f, finv = _integral(doc, task, CA)
    cert = is_cleft(CA, f, finv)
    rep = Report(f"cleft {CA.name}")
    rep.extend(cert.report)
    info = {"cleft": cert.cleft, "total": cert.total if cert.finv is not None else False}
    if cert.finv is not None and not info["total"]:
        _, _, trep = totalize(CA, f, cert.finv)
        rep.extend(trep, "totalize: ")
    return rep, info, [f"cleft: {'yes' if cert.cleft else 'no'}"]


def task_crossed(doc, task, opts):
    CS = _arg(doc, task, "structure", CrossedSystem)
    rep = Report(f"crossed {CS.name}")
    vrep = verify_crossed_system(CS)
    rep.extend(vrep)
    info = {"crossed_system": is_crossed_system(CS, vrep)}
    if not info["crossed_system"]:
        return rep, info, ["not a crossed system"]
    info.update(special_case_checks(CS))
    CP = build_crossed_product(CS)
    rep.extend(CP.report, "product: ")
    cert = crossed_product_cleft(CP)
    rep.extend(cert.report, "cleft: ")
    info["product_dim"] = CP.algebra.space.dim
    lines = [f"crossed product: dim {info['product_dim']}",
             "special cases: " + ", ".join(f"{k}={'yes' if info[k] else 'no'}"
                                           for k in ("smash", "twisted", "strict", "centerValued"))]
    return rep, info, lines


def task_roundtrip(doc, task, opts):
    name = task["args"].get("structure")
    obj = doc.structures.get(name)
    if isinstance(obj, CrossedSystem):
        _, rep = roundtrip_crossed(obj)
        line = "crossed→cleft→crossed: " + ("exact equality" if rep.passed else "MISMATCH")
    elif isinstance(obj, ComoduleAlgebra):
        f, finv = _integral(doc, task, obj)
        cert = is_cleft(obj, f, finv)
        _, _, rep = roundtrip_cleft(cert)
        line = "cleft→crossed→cleft: " + ("isomorphism verified" if rep.passed else "MISMATCH")
    else:
        raise InputError(f"{task['where']}.args.structure", f"{name!r} is not a crossed system or comodule")
    return rep, {}, [line]


def task_equiv(doc, task, opts):
    lhs = _arg(doc, task, "lhs", CrossedSystem)
    rhs = _arg(doc, task, "rhs", CrossedSystem)
    rep = Report(f"equiv {lhs.name} ~ {rhs.name}")
    info = {}
    if "witness" in task["args"]:
        h = _witness(doc, task, lhs)
        eq = check_equivalence(lhs, rhs, h)
        rep.extend(eq)
        equivalent = eq.passed
    else:
        res = search_equivalence(lhs, rhs, opts.max_enum, opts.parallel)
        equivalent, h = res.equivalent, res.witness
        info.update(candidate_space=res.candidate_space, normalized_candidates=res.normalized_candidates)
        rep.truth("search completed", True)
    if equivalent:
        _, _, iso = equivalence_to_iso(lhs, rhs, h)
        rep.extend(iso, "iso: ")
        info["witness"] = h.to_json()
    info["equivalent"] = equivalent
    if "expect" in task["args"]:
        rep.truth("matches expectation", equivalent == bool(task["args"]["expect"]))
    lines = [f"equivalent: {'yes' if equivalent else 'no'}"]
    if "candidate_space" in info:
        lines.append(f"candidates: {info['candidate_space']} maps, {info['normalized_candidates']} normalized")
    return rep, info, lines


def task_h2(doc, task, opts):
    name = task["args"].get("structure")
    obj = doc.structures.get(name)
    if isinstance(obj, CrossedSystem):
        cert = crossed_product_cleft(build_crossed_product(obj))
    elif isinstance(obj, ComoduleAlgebra):
        f, finv = _integral(doc, task, obj)
        cert = is_cleft(obj, f, finv)
    else:
        raise InputError(f"{task['where']}.args.structure", f"{name!r} is not a crossed system or comodule")
    rep, s = verify_h2_bijection(cert, opts.max_enum, opts.parallel)
    info = {"cocycles": s.cocycles, "classes": s.classes, "systems": s.systems, "system_classes": s.system_classes}
    if "expect_classes" in task["args"]:
        rep.truth("matches expected class count", s.classes == task["args"]["expect_classes"])
    return rep, info, [f"cocycles: {s.cocycles}", f"classes: {s.classes}",
                       f"crossed systems: {s.systems} in {s.system_classes} classes"]


TASKS = {"verify": task_verify, "groupoid": task_groupoid, "comodule": task_comodule, "cleft": task_cleft,
         "crossed": task_crossed, "roundtrip": task_roundtrip, "equiv": task_equiv, "h2": task_h2}

_DEFAULT_KIND = {"verify": WeakHopfAlgebra, "comodule": ComoduleAlgebra, "cleft": ComoduleAlgebra,
                 "crossed": CrossedSystem, "roundtrip": CrossedSystem, "h2": CrossedSystem}


def default_tasks(doc: Document, op: str) -> list:
    """One task per applicable declaration when the document lists none."""
    if op == "groupoid":
        return [{"op": op, "name": f"groupoid-{g}", "args": {"groupoid": g}, "where": f"groupoids.{g}"}
                for g in doc.groupoids]
    if op == "equiv":
        names = [n for n, s in doc.structures.items() if isinstance(s, CrossedSystem)]
        return [{"op": op, "name": f"equiv-{a}-{b}", "args": {"lhs": a, "rhs": b}, "where": "structures"}
                for i, a in enumerate(names) for b in names[i + 1:]]
    kinds = (ComoduleAlgebra, CrossedSystem) if op == "roundtrip" else (_DEFAULT_KIND[op],)
    return [{"op": op, "name": f"{op}-{n}", "args": {"structure": n}, "where": f"structures.{n}"}
            for n, s in doc.structures.items() if isinstance(s, kinds)]


def run_task(doc, task, opts) -> TaskResult:
    t0 = time.perf_counter()
    try:
        rep, info, lines = TASKS[task["op"]](doc, task, opts)
    except (InputError, SearchSpaceTooLarge):
        raise
    except WhopfError as e:
        rep = Report(task["name"])
        rep.truth(type(e).__name__, False, str(e))
        info, lines = {}, []
    return TaskResult(task["name"], task["op"], rep, info, lines, time.perf_counter() - t0)


def render_text(results, timing: bool) -> str:
    out = []
    for r in results:
        head = f"== {r.name} [{r.op}]: {'PASS' if r.passed else 'FAIL'}"
        if timing:
            head += f" ({r.seconds:.3f} s)"
        out.append(head)
        out.extend(f"  {line}" for line in r.lines)
        for c in r.report.checks:
            out.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.label}" + (f"  ({c.detail})" if c.detail else ""))
    n_ok = sum(r.passed for r in results)
    out.append(f"{n_ok}/{len(results)} tasks passed")
    return "\n".join(out) + "\n"


def identity_catalog() -> dict:
    """Labels of every check the commands report, gathered from small reference runs."""
    from .catalog import m2_conjugation, z2_trivial
    from .comodule import self_comodule as selfc
    G = [g for g in small_groupoids() if g.name == "indisc2"][0]
    H = groupoid_algebra(G, GF(3))
    cat = {}

    def add(op, rep):
        seen = cat.setdefault(op, [])
        for lab in rep.labels():
            if lab not in seen:
                seen.append(lab)

    rep = Report("")
    rep.extend(verify_weak_hopf(H))
    rep.extend(verify_projection_identities(H))
    rep.extend(antipode_properties(H))
    add("verify", rep)
    add("groupoid", omega_report(H))
    CA = selfc(H)
    rep = verify_comodule_algebra(CA)
    rep.extend(verify_entwining(CA))
    add("comodule", rep)
    cert = is_cleft(CA, *identity_integral(H))
    add("cleft", cert.report)
    cs = m2_conjugation()
    rep = verify_crossed_system(cs)
    rep.extend(build_crossed_product(cs).report, "product: ")
    add("crossed", rep)
    add("roundtrip", roundtrip_crossed(cs)[1])
    add("roundtrip", roundtrip_cleft(cert)[2])
    a, b = z2_trivial(3, 1), z2_trivial(3, 1)
    h = search_equivalence(a, b).witness
    add("equiv", equivalence_to_iso(a, b, h)[2])
    add("h2", verify_h2_bijection(crossed_product_cleft(build_crossed_product(a)))[0])
    return cat


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="whopf", description="Exact checks for weak Hopf algebras, "
                                 "crossed products and cleft extensions.")
    ap.add_argument("command", nargs="?", choices=COMMANDS)
    ap.add_argument("--input", help="JSON document with field, groupoids, structures and tasks")
    ap.add_argument("--json-out", help="also write the report as JSON to this path")
    ap.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM, help="refuse searches larger than this")
    ap.add_argument("--parallel", type=int, default=1, help="worker threads for exhaustive searches")
    ap.add_argument("--task", action="append", help="run only tasks with this name (repeatable)")
    ap.add_argument("--list-identities", action="store_true", help="print the labels of every reported check")
    ap.add_argument("--timing", action="store_true", help="include wall-clock times in the reports")
    opts = ap.parse_args(argv)

    if opts.list_identities:
        for op, labels in identity_catalog().items():
            if opts.command and op != opts.command:
                continue
            print(f"[{op}]")
            for lab in labels:
                print(f"  {lab}")
        return 0
    if not opts.command or not opts.input:
        ap.print_usage(sys.stderr)
        print("whopf: error: a command and --input are required", file=sys.stderr)
        return 2
    try:
        doc = load_document(opts.input)
        tasks = [t for t in doc.tasks if t["op"] == opts.command] or default_tasks(doc, opts.command)
        if opts.task:
            tasks = [t for t in tasks if t["name"] in opts.task]
        if not tasks:
            raise InputError("tasks", f"nothing to run for {opts.command!r}")
        results = [run_task(doc, t, opts) for t in tasks]
    except InputError as e:
        print(f"whopf: input error at {e}", file=sys.stderr)
        return 2
    except SearchSpaceTooLarge as e:
        print(f"whopf: search too large: {e}", file=sys.stderr)
        return 3
    sys.stdout.write(render_text(results, opts.timing))
    ok = all(r.passed for r in results)
    if opts.json_out:
        payload = {"command": opts.command, "field": str(doc.field), "status": "pass" if ok else "fail",
                   "tasks": [r.to_dict(opts.timing) for r in results]}
        with open(opts.json_out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True, ensure_ascii=False)
            fh.write("\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
