# efountain/pipeline.py
"""Full analysis pipeline (fountain, orders, category, algebra) and the command registry."""
from __future__ import annotations
from dataclasses import dataclass
import logging
import pathlib
from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Tuple, Union

import pandas as pd
from sympy.polys.domains import ZZ, Domain

from efountain.algebra import ChangeOfBasis, phi_is_injective, verify_homomorphism, verify_isomorphism
from efountain.catalan import run_catalan_checks
from efountain.category import FiniteCategory, build_category, category_axioms
from efountain.config import load_settings
from efountain.corpus import CorpusEntry, enumerate_structures
from efountain.data import load_e_set, load_structure, parse_cayley_table, parse_generators
from efountain.errors import FountainError, NotEFountain, NotReduced
from efountain.fountain import (
    EFountainStructure,
    ample_report,
    analyze_reduced_e_fountain,
    check_ehresmann_equivalence,
    check_generalized_left_ample,
    check_generalized_right_ample,
    check_left_ample,
    check_right_ample,
    check_subband,
    check_subsemilattice,
    is_E_ehresmann,
)
from efountain.orders import NoEmbedding, diagnose, embedding_order, leq_l, tri_left
from efountain.relation import BinaryRelation
from efountain.report import Report, fmt_elements
from efountain.rings import parse_ring, ring_label
from efountain.semigroup import FiniteSemigroup, idempotents, is_J_trivial

log = logging.getLogger(__name__)

ALL_IDEMPOTENTS = "all-idempotents"

# check names after reducedEFountain, in report order
_FOUNTAIN_CHECKS = ["congruence", "subband", "subsemilattice", "eEhresmann"]
_CONGRUENCE_CHECKS = [
    "rightAmple",
    "leftAmple",
    "generalizedRightAmple",
    "generalizedLeftAmple",
    "categoryAxioms",
    "embeddingOrder",
    "homomorphism",
    "phiInjective",
    "mobiusInverse",
    "isomorphism",
    "theorem.rightAmpleImpliesGeneralized",
    "theorem.mainHomomorphism",
    "theorem.moduleIsomorphism",
    "theorem.ehresmannEquivalence",
]


@dataclass
class Analysis:
    report: Report
    structure: Optional[EFountainStructure] = None
    category: Optional[FiniteCategory] = None
    tri: Optional[BinaryRelation] = None
    order: Union[BinaryRelation, NoEmbedding, None] = None


# ---------- inputs ----------
def load_input(path: str, fmt: Optional[str] = None) -> FiniteSemigroup:
    """Load a structure file; `fmt` overrides the suffix-based choice."""
    if fmt is None:
        return load_structure(path)
    p = pathlib.Path(path)
    text = p.read_text()
    if fmt == "transformations":
        return parse_generators(text, p.stem)
    if fmt == "table":
        return parse_cayley_table(text, p.stem)
    raise ValueError(f"unknown input format {fmt!r}; expected table or transformations")


def resolve_e_set(S: FiniteSemigroup, spec: Union[str, Iterable[int], None] = None) -> Tuple[int, ...]:
    if spec is None or spec == ALL_IDEMPOTENTS:
        return idempotents(S)
    if isinstance(spec, str):
        return load_e_set(spec)
    return tuple(sorted(set(int(e) for e in spec)))


def _skip_all(report: Report, names: List[str], reason: str) -> None:
    for name in names:
        report.skip(name, reason)


# ---------- analyze ----------
def run_analysis(S: FiniteSemigroup, E: Iterable[int], ring: Domain = ZZ,
                 second_ring: Optional[Domain] = None, name: str = "") -> Analysis:
    report = Report(name or S.name or "semigroup")
    analysis = Analysis(report)
    try:
        F = analyze_reduced_e_fountain(S, E)
    except (NotEFountain, NotReduced) as exc:
        report.add("reducedEFountain", "FAIL", str(exc))
        _skip_all(report, _FOUNTAIN_CHECKS + _CONGRUENCE_CHECKS, "not a reduced E-Fountain structure")
        return analysis
    analysis.structure = F
    report.check("reducedEFountain", True)
    report.note(f"|S|={S.size} E={fmt_elements(F.e_set, S)}")

    tri = tri_left(F)
    analysis.tri = tri
    diag = diagnose(tri)
    parts = [
        f"reflexive={diag.reflexive}",
        f"antisymmetric={diag.antisymmetric}",
        f"transitive={diag.transitive}",
    ]
    if diag.antisymmetric_witness is not None:
        parts.append(f"antisymmetry fails at {fmt_elements(diag.antisymmetric_witness, S)}")
    if diag.transitive_witness is not None:
        parts.append(f"transitivity fails at {fmt_elements(diag.transitive_witness, S)}")
    report.note("tri_l " + " ".join(parts))

    congruence = F.congruence
    report.check("congruence", congruence, S=S)
    report.check("subband", check_subband(F.e_set, S), S=S)
    lattice = check_subsemilattice(F.e_set, S)
    report.check("subsemilattice", lattice, S=S)
    report.check("eEhresmann", is_E_ehresmann(F))
    if not congruence.holds:
        _skip_all(report, _CONGRUENCE_CHECKS, "congruence condition fails")
        return analysis

    ample = ample_report(F)
    report.check("rightAmple", ample.right_ample, S=S)
    report.check("leftAmple", ample.left_ample, S=S)
    report.check("generalizedRightAmple", ample.generalized_right_ample, S=S)
    report.check("generalizedLeftAmple", ample.generalized_left_ample, S=S)

    try:
        C = build_category(F)
    except FountainError as exc:
        report.add("categoryAxioms", "FAIL", str(exc))
        _skip_all(report, _CONGRUENCE_CHECKS[5:], "category axioms fail")
        return analysis
    analysis.category = C
    report.check("categoryAxioms", category_axioms(C))

    order = embedding_order(F, tri)
    analysis.order = order
    if isinstance(order, NoEmbedding):
        report.add("embeddingOrder", "FAIL", f"{order.reason} {fmt_elements(order.cycle, S)}")
    else:
        report.check("embeddingOrder", True)

    hom = verify_homomorphism(F, C, ring, tri)
    report.check("homomorphism", hom, S=S)
    if second_ring is not None and second_ring != ring:
        label = ring_label(second_ring)
        report.check(f"homomorphism[{label}]", verify_homomorphism(F, C, second_ring, tri), S=S)
    report.check("phiInjective", phi_is_injective(F, ring, tri))

    if isinstance(order, NoEmbedding):
        report.skip("mobiusInverse", "tri_l is not contained in a partial order")
        basis = None
    else:
        basis = ChangeOfBasis(F, C, order, ring)
        report.check("mobiusInverse", basis.inverse_is_two_sided())
    iso = verify_isomorphism(F, C, order, ring)
    witness = iso.reason
    if iso.witness is not None:
        witness += f" at {fmt_elements(iso.witness, S)}"
    report.check("isomorphism", iso.holds, witness)

    # theorem lines: each states an implication or equivalence between lines above
    report.check("theorem.rightAmpleImpliesGeneralized",
                 (not ample.right_ample.holds or ample.generalized_right_ample.holds)
                 and (not ample.left_ample.holds or ample.generalized_left_ample.holds))
    report.check("theorem.mainHomomorphism", hom.holds == ample.generalized_right_ample.holds,
                 f"homomorphism={hom.holds} generalizedRightAmple={ample.generalized_right_ample.holds}")
    if basis is None:
        report.skip("theorem.moduleIsomorphism", "tri_l is not contained in a partial order")
    else:
        report.check("theorem.moduleIsomorphism",
                     basis.first_psi_phi_failure() is None and basis.first_phi_psi_failure() is None)
    if lattice.holds:
        report.check("theorem.ehresmannEquivalence",
                     check_ehresmann_equivalence(F) == ample.generalized_right_ample.holds)
    else:
        report.skip("theorem.ehresmannEquivalence", "E is not a subsemilattice")
    log.info("analysis of %s: %d failing checks", report.structure, len(report.failures()))
    return analysis


# ---------- corpus predicates ----------
PREDICATES: Dict[str, Callable[[EFountainStructure], bool]] = {
    "congruence": lambda F: F.congruence.holds,
    "subband": lambda F: check_subband(F.e_set, F.semigroup).holds,
    "subsemilattice": lambda F: check_subsemilattice(F.e_set, F.semigroup).holds,
    "eEhresmann": is_E_ehresmann,
    "jTrivial": lambda F: is_J_trivial(F.semigroup),
    "rightAmple": lambda F: check_right_ample(F).holds,
    "leftAmple": lambda F: check_left_ample(F).holds,
    "generalizedRightAmple": lambda F: check_generalized_right_ample(F).holds,
    "generalizedLeftAmple": lambda F: check_generalized_left_ample(F).holds,
    "triLeftSymmetric": lambda F: tri_left(F).is_symmetric(),
    "triEqualsLeqL": lambda F: leq_l(F) == tri_left(F),
    "embeddingOrder": lambda F: not isinstance(embedding_order(F), NoEmbedding),
    "homomorphism": lambda F: verify_homomorphism(F, build_category(F)).holds,
    "phiInjective": lambda F: phi_is_injective(F),
    "isomorphism": lambda F: verify_isomorphism(F, build_category(F)).holds,
}


def evaluate_predicates(entry: CorpusEntry, names: Optional[Iterable[str]] = None) -> Dict[str, bool]:
    """Computed values of the named predicates; defaults to the entry's expected keys."""
    names = list(names if names is not None else entry.expected)
    out: Dict[str, bool] = {}
    try:
        F = analyze_reduced_e_fountain(entry.semigroup, entry.e_set)
    except (NotEFountain, NotReduced):
        F = None
    for name in names:
        if name == "reducedEFountain":
            out[name] = F is not None
        elif name not in PREDICATES:
            raise KeyError(f"unknown predicate {name!r}")
        elif F is not None:
            out[name] = bool(PREDICATES[name](F))
    return out


def expectation_mismatches(entry: CorpusEntry) -> Dict[str, Tuple[bool, bool]]:
    """name -> (expected, computed) for every predicate that disagrees."""
    computed = evaluate_predicates(entry)
    return {
        name: (want, computed[name])
        for name, want in entry.expected.items()
        if name in computed and computed[name] != want
    }


# ---------- search ----------
@dataclass(frozen=True)
class SearchRecord:
    name: str
    order: int
    e_size: int
    homomorphism: bool
    generalized_right_ample: bool
    subsemilattice: bool
    right_ample: Optional[bool] = None


def search_records(max_order: int, ring: Domain = ZZ) -> Iterator[SearchRecord]:
    for entry in enumerate_structures(max_order):
        F = analyze_reduced_e_fountain(entry.semigroup, entry.e_set)
        C = build_category(F)
        hom = verify_homomorphism(F, C, ring)
        gen = check_generalized_right_ample(F)
        lattice = check_subsemilattice(F.e_set, F.semigroup).holds
        right = check_ehresmann_equivalence(F) if lattice else None
        yield SearchRecord(entry.name, F.size, len(F.e_set), hom.holds, gen.holds, lattice, right)


def record_lines(rec: SearchRecord) -> List[Tuple[str, bool, str]]:
    lines = [(f"{rec.name}.mainHomomorphism", rec.homomorphism == rec.generalized_right_ample,
              f"homomorphism={rec.homomorphism} generalizedRightAmple={rec.generalized_right_ample}")]
    if rec.subsemilattice:
        lines.append((f"{rec.name}.ehresmannEquivalence", rec.right_ample == rec.generalized_right_ample,
                      f"rightAmple={rec.right_ample} generalizedRightAmple={rec.generalized_right_ample}"))
    return lines


def search_summary(records: Iterable[SearchRecord]) -> pd.DataFrame:
    df = pd.DataFrame([r.__dict__ for r in records])
    if df.empty:
        return pd.DataFrame(columns=["order", "entries", "homomorphism", "generalized_right_ample", "subsemilattice"])
    return (
        df.groupby("order")
        .agg(entries=("name", "count"),
             homomorphism=("homomorphism", "sum"),
             generalized_right_ample=("generalized_right_ample", "sum"),
             subsemilattice=("subsemilattice", "sum"))
        .reset_index()
    )


def run_search(max_order: int, ring: Domain = ZZ,
               emit: Optional[Callable[[str], None]] = None) -> Tuple[Report, pd.DataFrame]:
    report = Report(f"search(max_order={max_order})")
    records = []
    for rec in search_records(max_order, ring):
        records.append(rec)
        for name, holds, witness in record_lines(rec):
            report.check(name, holds, witness)
            if emit is not None:
                emit(report.lines[-1].render())
    summary = search_summary(records)
    report.note(f"{len(records)} structures over {ring_label(ring)}")
    return report, summary


# ---------- command registry ----------
COMMAND_SPECS = [
    {
        "name": "analyze",
        "description": "Run the full pipeline on one structure file and report every check.",
        "arguments": {
            "input": "Cayley table file, or a generator file (.gens).",
            "e_set": "E-set file, or all-idempotents.",
            "ring": "int, rational or modN.",
            "second_ring": "Optional second ring for the homomorphism check.",
            "format": "table or transformations; overrides the file suffix.",
        },
    },
    {
        "name": "catalan",
        "description": "Verify the Catalan monoid checks and the algebra isomorphism at one degree.",
        "arguments": {
            "degree": "Degree d of CT_d.",
            "ring": "int, rational or modN.",
            "second_ring": "Optional second ring for the homomorphism check.",
        },
    },
    {
        "name": "search",
        "description": "Enumerate small structures and check the homomorphism biconditional on each.",
        "arguments": {
            "max_order": "Largest semigroup order to enumerate.",
            "ring": "int, rational or modN.",
        },
    },
]


def _rings(args: Dict[str, Any]) -> Tuple[Domain, Optional[Domain]]:
    settings = load_settings()
    ring = parse_ring(args.get("ring") or settings.ring)
    second = args.get("second_ring", settings.second_ring)
    return ring, (parse_ring(second) if second else None)


def cmd_analyze(args: Dict[str, Any]) -> Dict[str, Any]:
    S = load_input(args["input"], args.get("format"))
    E = resolve_e_set(S, args.get("e_set"))
    ring, second = _rings(args)
    analysis = run_analysis(S, E, ring, second)
    return {"report": analysis.report, "analysis": analysis}


def cmd_catalan(args: Dict[str, Any]) -> Dict[str, Any]:
    ring, second = _rings(args)
    return {"report": run_catalan_checks(int(args["degree"]), ring, second)}


def cmd_search(args: Dict[str, Any]) -> Dict[str, Any]:
    ring, _ = _rings(args)
    report, summary = run_search(int(args["max_order"]), ring, args.get("emit"))
    return {"report": report, "summary": summary}


def dispatch(command: str, args: Dict[str, Any]) -> Dict[str, Any]:
    if command == "analyze":
        return cmd_analyze(args)
    if command == "catalan":
        return cmd_catalan(args)
    if command == "search":
        return cmd_search(args)
    raise ValueError(f"unknown command {command!r}")
