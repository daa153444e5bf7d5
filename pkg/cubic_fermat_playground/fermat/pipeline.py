"""
Decides what can be said about nontrivial solutions of x³ + y³ = kz³ over
Q(√d): a verified witness, a conditional expectation from the root number,
a known trivial-only curve or nothing.
"""
import dataclasses
import enum
import logging
from typing import Iterable
from typing import Optional

from cubic_fermat_playground.core.curves import check_fermat_parameters
from cubic_fermat_playground.core.curves import CurvePoint
from cubic_fermat_playground.core.curves import torsion_of_dk
from cubic_fermat_playground.core.curves import torsion_points_enumerate
from cubic_fermat_playground.core.curves import TorsionGroup
from cubic_fermat_playground.core.exceptions import ExcludedParameterError
from cubic_fermat_playground.core.exceptions import PreconditionError
from cubic_fermat_playground.core.exceptions import ProofInvariantError
from cubic_fermat_playground.core.integers import powerfree_decompose
from cubic_fermat_playground.core.integers import squarefree_part
from cubic_fermat_playground.core.quadratic import clear_denominators
from cubic_fermat_playground.core.quadratic import primitive_triple
from cubic_fermat_playground.core.root_number import l_vanishing_criterion
from cubic_fermat_playground.core.root_number import root_number_fermat
from cubic_fermat_playground.core.root_number import root_number_mordell
from cubic_fermat_playground.core.root_number import RootNumberReport
from cubic_fermat_playground.core.search import iter_qpoints
from cubic_fermat_playground.core.search import search_qpoints
from cubic_fermat_playground.core.search import SearchBounds
from cubic_fermat_playground.fermat.correspondence import classify_solution
from cubic_fermat_playground.fermat.correspondence import FermatSolution
from cubic_fermat_playground.fermat.correspondence import qpoint_to_solution
from cubic_fermat_playground.fermat.correspondence import TrivialityClass
from cubic_fermat_playground.reference.embedded import exclusion_note
from cubic_fermat_playground.reference.embedded import lookup
from cubic_fermat_playground.reference.embedded import ReferenceEntry


logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class FermatParameters:
    """
    (d, k) after normalization. The input d is `d · d_scale²` and the input k
    is `k · k_scale³`, the cube part being absorbed into z.
    """

    d: int
    k: int
    d_scale: int = 1
    k_scale: int = 1

    @property
    def D(self) -> int:
        return -432 * self.d**3 * self.k**2


def normalize_parameters(d: int, k: int) -> FermatParameters:
    if d == 0:
        raise PreconditionError("d=0 does not define a field.")
    if k <= 0:
        raise PreconditionError(f"k={k} must be a positive integer.")
    d_core, d_scale = squarefree_part(d)
    k_core, k_scale = powerfree_decompose(k, 3)
    if d_scale != 1:
        logger.info(f"Replacing d={d} by its squarefree part {d_core}.")
    if k_scale != 1:
        logger.info(f"Folding the cube {k_scale}³ of k={k} into z, using k={k_core}.")
    check_fermat_parameters(d_core, k_core)
    if d_core == 1 and k_core != 1:
        raise ExcludedParameterError(f"d={d} gives K = Q, only k=1 is covered there.")
    return FermatParameters(d_core, k_core, d_scale, k_scale)


@dataclasses.dataclass(frozen=True)
class Classification:
    parameters: FermatParameters
    torsion: TorsionGroup
    root_number: RootNumberReport
    fermat_root_number: Optional[int]
    criterion: Optional[bool]
    reference: Optional[ReferenceEntry]
    exclusion_note: Optional[str] = None


def classify_parameters(d: int, k: int) -> Classification:
    """
    Torsion and root number of y² = x³ − 432d³k². The closed sign formula and
    the vanishing criterion are only stated for k = 1.
    """
    parameters = normalize_parameters(d, k)
    d, k = parameters.d, parameters.k
    return Classification(
        parameters=parameters,
        torsion=torsion_of_dk(d, k),
        root_number=root_number_mordell(parameters.D),
        fermat_root_number=root_number_fermat(d) if k == 1 else None,
        criterion=l_vanishing_criterion(d) if k == 1 else None,
        reference=lookup(d, k),
        exclusion_note=exclusion_note(d, k),
    )


@dataclasses.dataclass(frozen=True)
class SearchDiagnostic:
    bounds: SearchBounds
    points: tuple[CurvePoint, ...]
    torsion_points: frozenset[CurvePoint]
    exhausted: bool

    @property
    def off_torsion(self) -> tuple[CurvePoint, ...]:
        return tuple(p for p in self.points if p not in self.torsion_points)


class VerdictKind(enum.Enum):
    PROVEN_NONTRIVIAL = "ProvenNontrivial"
    EXPECTED_NONTRIVIAL_BSD = "ExpectedNontrivialBSD"
    TRIVIAL_ONLY_KNOWN = "TrivialOnlyKnown"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


@dataclasses.dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    classification: Classification
    search: SearchDiagnostic
    witness: Optional[FermatSolution] = None
    qpoint: Optional[CurvePoint] = None
    raw_solution: Optional[FermatSolution] = None

    def __post_init__(self) -> None:
        if self.kind == VerdictKind.PROVEN_NONTRIVIAL:
            if self.witness is None or self.qpoint is None:
                raise ProofInvariantError("A proven verdict needs a witness.")
        if self.kind == VerdictKind.TRIVIAL_ONLY_KNOWN and self.classification.reference is None:
            raise ProofInvariantError("A trivial-only verdict needs a reference entry.")

    @property
    def parameters(self) -> FermatParameters:
        return self.classification.parameters


def integral_witness(solution: FermatSolution) -> FermatSolution:
    """The solution scaled into the ring of integers, common factors removed."""
    triple, _ = clear_denominators(*solution.triple, solution.k)
    triple, _ = primitive_triple(*triple)
    witness = FermatSolution(*triple, solution.k)
    if not all(e.is_integral() for e in witness.triple):
        raise ProofInvariantError(f"{witness} is not integral after clearing denominators.")
    if classify_solution(witness) != TrivialityClass.NONTRIVIAL:
        raise ProofInvariantError(f"Witness {witness} is trivial.")
    return witness


def _search_points(D: int, bounds: SearchBounds, workers: int) -> Iterable[CurvePoint]:
    if workers > 1:
        return search_qpoints(D, bounds, workers=workers)
    return iter_qpoints(D, bounds)


def full_pipeline(
    d: int, k: int, bounds: SearchBounds = SearchBounds(), workers: int = 1
) -> Verdict:
    classification = classify_parameters(d, k)
    parameters = classification.parameters
    d, k, D = parameters.d, parameters.k, parameters.D
    torsion = frozenset(torsion_points_enumerate(D))
    logger.info(f"Deciding x³+y³={k}z³ over Q(sqrt({d})) via y²=x³{D:+d} …")

    if classification.reference is not None:
        points = tuple(_search_points(D, bounds, workers))
        search = SearchDiagnostic(bounds, points, torsion, exhausted=True)
        if search.off_torsion:
            logger.warning(
                f"Found {len(search.off_torsion)} non-torsion points on the "
                f"rank 0 curve {classification.reference.curve_label}."
            )
        return Verdict(VerdictKind.TRIVIAL_ONLY_KNOWN, classification, search)

    if d == -3:
        raise ExcludedParameterError(
            f"d=-3 with k={k}: points on y²=x³{D:+d} do not give nontrivial solutions."
        )

    for point in _search_points(D, bounds, workers):
        solution = qpoint_to_solution(point, d, k)
        witness = integral_witness(solution)
        logger.info(f"Found {point}, witness {witness}.")
        search = SearchDiagnostic(bounds, (point,), torsion, exhausted=False)
        return Verdict(
            VerdictKind.PROVEN_NONTRIVIAL,
            classification,
            search,
            witness=witness,
            qpoint=point,
            raw_solution=solution,
        )

    search = SearchDiagnostic(bounds, (), torsion, exhausted=True)
    if k == 1 and classification.criterion:
        return Verdict(VerdictKind.EXPECTED_NONTRIVIAL_BSD, classification, search)
    return Verdict(VerdictKind.UNKNOWN, classification, search)
