"""Exception hierarchy shared by all modules."""


class SysgraphError(ValueError):
    """Base class for every structured error raised by the package."""


class GraphError(SysgraphError):
    """Input does not describe a properly edge-colored regular graph."""


class IdOutOfRange(GraphError):
    def __init__(self, vertex, n):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex id {vertex} outside 0..{n - 1}")


class ColorOutOfRange(GraphError):
    def __init__(self, color, d):
        self.color = color
        self.d = d
        super().__init__(f"color {color} outside 1..{d}")


class SelfLoop(GraphError):
    def __init__(self, u):
        self.u = u
        super().__init__(f"self-loop at vertex {u}")


class DuplicateEdge(GraphError):
    def __init__(self, u, v):
        self.u, self.v = u, v
        super().__init__(f"repeated edge between {u} and {v}")


class NotRegular(GraphError):
    def __init__(self, vertex, degree, d):
        self.vertex = vertex
        self.degree = degree
        self.d = d
        super().__init__(f"vertex {vertex} has degree {degree}, expected {d}")


class ImproperColoring(GraphError):
    def __init__(self, vertex, color, count):
        self.vertex = vertex
        self.color = color
        self.count = count
        super().__init__(f"vertex {vertex} touches {count} edges of color {color}")


class ComponentNotRegular(GraphError):
    def __init__(self, component, reason=""):
        self.component = component
        super().__init__(f"component {component} is not a regular colored graph: {reason}")


class ComplexError(SysgraphError):
    """Input does not describe a chromatic, non-branching, pure complex."""


class NotPure(ComplexError):
    def __init__(self, facet, size, d):
        self.facet = facet
        super().__init__(f"facet {facet} has {size} vertices, expected {d}")


class NotChromatic(ComplexError):
    def __init__(self, facet, missing_color):
        self.facet = facet
        self.missing_color = missing_color
        super().__init__(f"facet {facet} has no vertex of color {missing_color}")


class Branching(ComplexError):
    def __init__(self, face, count):
        self.face = face
        self.count = count
        super().__init__(f"face {face} lies in {count} facets, expected 2")


class DimensionTooLarge(SysgraphError):
    def __init__(self, d, limit):
        self.d = d
        self.limit = limit
        super().__init__(f"dimension {d} exceeds supported maximum {limit}")


class SizeOverflow(SysgraphError, OverflowError):
    def __init__(self, d, largest_d):
        self.d = d
        self.largest_d = largest_d
        super().__init__(
            f"n^({d}) exceeds 2^53; largest representable dimension is {largest_d}")


class TooLarge(SysgraphError):
    """A computation would exceed its feasibility guard."""


class EmptySet(SysgraphError):
    pass


class DomainError(SysgraphError):
    pass


class BadCopyIndex(SysgraphError):
    pass
