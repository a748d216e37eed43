"""Exact coloring of disjointness graphs of segments and lines, with certificates."""
from .certificate import Certificate
from .geometry import EuclLine, HomPlane, HomPoint, ProjLine, Segment
from .graph import DGraph, Polyline, PuncturedLine, TwoSegments, build_graph
from .lines import color_euclidean_lines, color_projective_lines
from .planar import color_planar_segments
from .segments3d import color_segments_3d, color_segments_kplanes
from .verify import extract_ramsey_witness, verify_certificate

__all__ = [
    "Certificate", "DGraph", "EuclLine", "HomPlane", "HomPoint", "Polyline", "ProjLine",
    "PuncturedLine", "Segment", "TwoSegments", "build_graph", "color_euclidean_lines",
    "color_planar_segments", "color_projective_lines", "color_segments_3d",
    "color_segments_kplanes", "extract_ramsey_witness", "verify_certificate",
]
__version__ = "0.1.0"
