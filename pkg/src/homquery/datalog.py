"""
A minimal Boolean Datalog evaluator: Horn rules over EDB predicates
(the input structure's relations) and IDB predicates including a nullary
goal, evaluated bottom-up by naive iteration to a fixpoint.

Rule text format, one rule per line:

    Head(x, y) :- Body1(x, z), Body2(z, y), x = y.

Equality atoms relate two variables; the goal predicate is a nullary
`Ans()` (case-insensitive name).  Every head variable must occur in the
body (equality atoms count as occurrences).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .structures import Structure

EQ = "="


@dataclass(frozen=True)
class Atom:
    predicate: str  # EQ for equality atoms
    variables: tuple[str, ...]


@dataclass(frozen=True)
class Rule:
    head: Atom
    body: tuple[Atom, ...]


class DatalogError(Exception):
    pass


@dataclass(frozen=True)
class DatalogProgram:
    rules: tuple[Rule, ...]
    idb: dict[str, int]   # predicate -> arity
    goal: str

    def edb_predicates(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for rule in self.rules:
            for atom in rule.body:
                if atom.predicate != EQ and atom.predicate not in self.idb:
                    out[atom.predicate] = len(atom.variables)
        return out


_ATOM_RE = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_']*)\s*\(([^)]*)\)\s*$")
_EQ_RE = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_']*)\s*=\s*([A-Za-z_][A-Za-z0-9_']*)\s*$")


def _parse_atom(text: str) -> Atom:
    eq = _EQ_RE.match(text)
    if eq:
        return Atom(EQ, (eq.group(1), eq.group(2)))
    m = _ATOM_RE.match(text)
    if not m:
        raise DatalogError(f"cannot parse atom {text!r}")
    name, args = m.group(1), m.group(2).strip()
    variables = tuple(a.strip() for a in args.split(",")) if args else ()
    if any(not v for v in variables):
        raise DatalogError(f"empty argument in atom {text!r}")
    return Atom(name, variables)


def _split_body(text: str) -> list[str]:
    # split on commas that are not inside parentheses
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def parse_program(text: str) -> DatalogProgram:
    rules = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("%"):
            continue
        if ":-" not in line:
            raise DatalogError(f"line without ':-' rejected: {raw!r}")
        if line.endswith("."):
            line = line[:-1]
        head_text, body_text = line.split(":-", 1)
        head = _parse_atom(head_text)
        if head.predicate == EQ:
            raise DatalogError("equality cannot be a rule head")
        body = tuple(_parse_atom(p) for p in _split_body(body_text))
        rules.append(Rule(head, body))
    if not rules:
        raise DatalogError("empty program")

    idb: dict[str, int] = {}
    for rule in rules:
        name = rule.head.predicate
        arity = len(rule.head.variables)
        if idb.setdefault(name, arity) != arity:
            raise DatalogError(f"inconsistent arity for {name}")

    goals = [name for name in idb
             if idb[name] == 0 and name.lower() == "ans"]
    if len(goals) != 1:
        raise DatalogError("program needs exactly one nullary goal Ans()")
    program = DatalogProgram(tuple(rules), idb, goals[0])
    check_safety(program)
    return program


def check_safety(program: DatalogProgram):
    "Range restriction: every head variable occurs in the body."
    for rule in program.rules:
        body_vars = {v for atom in rule.body for v in atom.variables}
        missing = set(rule.head.variables) - body_vars
        if missing:
            raise DatalogError(f"unsafe rule, head variables {missing} not in body")
        for atom in rule.body:
            if atom.predicate == EQ and len(atom.variables) != 2:
                raise DatalogError("equality atoms take exactly two variables")


def classify_program(program: DatalogProgram) -> tuple[bool, bool]:
    "(monadic, linear) flags over the recursive (IDB) predicates."
    real_idb = {name for name in program.idb if name != program.goal}
    monadic = all(program.idb[name] == 1 for name in real_idb)
    linear = all(
        sum(1 for atom in rule.body if atom.predicate in real_idb) <= 1
        for rule in program.rules)
    return monadic, linear


def _rule_matches(rule: Rule, structure: Structure, derived, out):
    "Add all head tuples derivable from one rule under current facts."
    variables = sorted({v for atom in rule.body for v in atom.variables}
                       | set(rule.head.variables))
    added = False
    # nested-loop join, most constrained first is unnecessary at desk scale
    for values in itertools.product(structure.domain, repeat=len(variables)):
        env = dict(zip(variables, values))
        ok = True
        for atom in rule.body:
            if atom.predicate == EQ:
                if env[atom.variables[0]] != env[atom.variables[1]]:
                    ok = False
                    break
            else:
                t = tuple(env[v] for v in atom.variables)
                if atom.predicate in derived:
                    if t not in derived[atom.predicate]:
                        ok = False
                        break
                elif t not in structure.relations.get(atom.predicate, ()):
                    ok = False
                    break
        if ok:
            head_tuple = tuple(env[v] for v in rule.head.variables)
            if head_tuple not in out[rule.head.predicate]:
                out[rule.head.predicate].add(head_tuple)
                added = True
    return added


def evaluate(program: DatalogProgram, structure: Structure) -> bool:
    "Naive bottom-up fixpoint; True iff the nullary goal is derived."
    for name, arity in program.edb_predicates().items():
        try:
            if structure.signature.arity(name) != arity:
                raise DatalogError(f"arity mismatch for EDB predicate {name}")
        except KeyError:
            raise DatalogError(f"EDB predicate {name} missing from the structure")

    derived: dict[str, set] = {name: set() for name in program.idb}
    max_arity = max(program.idb.values(), default=0)
    round_bound = (structure.domain_size ** max_arity + 1) * len(program.rules) + 1
    for _ in range(round_bound):
        changed = False
        for rule in program.rules:
            if _rule_matches(rule, structure, derived, derived):
                changed = True
        if not changed:
            return () in derived[program.goal]
    raise DatalogError("fixpoint round bound exceeded (should be impossible)")


DIRECTED_CYCLE_PROGRAM = """\
X(x, y) :- R(x, y).
X(x, y) :- X(x, x1), R(x1, y).
Ans() :- X(z, z).
"""

PQ_REACHABILITY_PROGRAM = """\
X(x) :- P(x).
X(y) :- X(x), R(x, y).
X(y) :- X(x), R(y, x).
Ans() :- X(y), Q(y).
"""

NONZERO_NET_CYCLE_PROGRAM = """\
X(a, b) :- a = b.
X(a, b) :- X(a', b'), R(a', a), R(b', b).
X(a, b) :- X(a', b'), R(a, a'), R(b, b').
X(a, b) :- X(a, c), X(c, b).
Y(a, b) :- R(a, b).
Y(a, b) :- Y(a, c), X(c, b).
Y(a, b) :- X(a, c), Y(c, b).
Y(a, b) :- Y(a, c), Y(c, b).
Ans() :- Y(a, a).
"""

BUILTIN_PROGRAM_TEXTS = {
    "directed-cycle": DIRECTED_CYCLE_PROGRAM,
    "pq-reachability": PQ_REACHABILITY_PROGRAM,
    "nonzero-net-cycle": NONZERO_NET_CYCLE_PROGRAM,
}


def builtin_programs() -> dict[str, DatalogProgram]:
    return {name: parse_program(text)
            for name, text in BUILTIN_PROGRAM_TEXTS.items()}
