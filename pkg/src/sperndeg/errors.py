"""Exception hierarchy.

Every exception carries an ``exit_code`` used by the command line tool.
The codes are grouped by class and are part of the public interface:

====  ==========================================================
code  meaning
====  ==========================================================
0     success (verdict holds, preconditions passed)
1     a bound failed (never expected on valid input)
2     command line usage error
3     a hypothesis of the checked statement does not hold
4     the input text could not be parsed
5     the input parsed but does not describe a valid instance
6     a bounded search or enumeration gave up
70    internal inconsistency (a bug)
====  ==========================================================
"""

from __future__ import annotations


class SperndegError(Exception):
    exit_code = 1


# -- invalid instances (5) -------------------------------------------------

class InvalidInstance(SperndegError):
    exit_code = 5


class InvalidTriangulation(InvalidInstance):
    pass


class DegenerateSimplex(InvalidTriangulation):
    def __init__(self, simplex, message=None):
        self.simplex = tuple(simplex)
        super().__init__(message or f"degenerate simplex {self.simplex}")


class IncoherentOrientation(InvalidTriangulation):
    def __init__(self, first, second=None, message=None):
        self.pair = (tuple(first), None if second is None else tuple(second))
        if message is None:
            if second is None:
                message = f"simplex {self.pair[0]} is negatively oriented"
            else:
                message = f"simplices {self.pair[0]} and {self.pair[1]} induce the same orientation on their common face"
        super().__init__(message)


class NonManifoldFace(InvalidTriangulation):
    def __init__(self, face, simplices, message=None):
        self.face = tuple(face)
        self.simplices = tuple(tuple(s) for s in simplices)
        super().__init__(message or f"face {self.face} is shared by {len(self.simplices)} simplices")


class OverlapDetected(InvalidTriangulation):
    def __init__(self, first, second, message=None):
        self.pair = (tuple(first), tuple(second))
        super().__init__(message or f"simplices {self.pair[0]} and {self.pair[1]} overlap")


class InvalidPolygon(InvalidInstance):
    pass


class InvalidPolytope(InvalidInstance):
    pass


class InvalidLabelling(InvalidInstance):
    pass


class ValidationError(InvalidInstance):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


# -- parse errors (4) ------------------------------------------------------

class ParseError(SperndegError):
    exit_code = 4

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


# -- hypothesis failures (3) -----------------------------------------------

class HypothesisFailure(SperndegError):
    exit_code = 3


class NotNeighboring(HypothesisFailure):
    def __init__(self, message, cycle=None, position=None):
        self.cycle = cycle
        self.position = position
        super().__init__(message)


class NotANL(HypothesisFailure):
    pass


class NonGenericPoint(HypothesisFailure):
    def __init__(self, point, witness=None):
        self.point = tuple(point)
        self.witness = witness
        extra = f" (on the span of vertices {witness})" if witness else ""
        super().__init__(f"point {self.point} is not generic{extra}")


class BoundaryImageViolation(HypothesisFailure):
    def __init__(self, face, labels):
        self.face = tuple(face)
        self.labels = tuple(labels)
        super().__init__(
            f"boundary face {self.face} with labels {self.labels} is not mapped into a facet"
        )


class NotAntipodallySymmetric(HypothesisFailure):
    pass


class NotCentrallySymmetric(HypothesisFailure):
    pass


class NotAntipodalLabelling(HypothesisFailure):
    def __init__(self, vertex, partner, labels):
        self.vertex, self.partner = vertex, partner
        super().__init__(
            f"boundary vertices {vertex} and {partner} are antipodal but labelled {labels[0]} and {labels[1]}"
        )


class BoundaryComplementaryEdge(HypothesisFailure):
    def __init__(self, edge):
        self.edge = tuple(edge)
        super().__init__(f"boundary edge {self.edge} is complementary")


class ComplementaryEdgePresent(HypothesisFailure):
    def __init__(self, edge):
        self.edge = tuple(edge)
        super().__init__(f"edge {self.edge} is complementary")


class NotACS(HypothesisFailure):
    def __init__(self, message, simplex=None):
        self.simplex = simplex
        super().__init__(message)


class NotATriangulationOfP(HypothesisFailure):
    pass


class PebbleSetUnavailable(HypothesisFailure):
    pass


class NotOrientable(HypothesisFailure):
    pass


# -- bounded searches (6) --------------------------------------------------

class SearchExhausted(SperndegError):
    exit_code = 6

    def __init__(self, message, certificate=None):
        self.certificate = certificate
        super().__init__(message)


class ConstraintInfeasible(SearchExhausted):
    pass


class SpaceTooLarge(SearchExhausted):
    pass


# -- bugs (70) -------------------------------------------------------------

class InternalInconsistency(SperndegError):
    exit_code = 70
