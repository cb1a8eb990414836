"""Exact incircle predicates for Euclidean Voronoi diagrams of points and
axes-aligned segments, with a quadratic-field oracle and degree auditing."""

from .geometry import (Axis, ConfigMismatch, DegenerateSegment, InstanceRecord,
                       NotAxisAligned, PointSite, SegmentSite, Sign, Site,
                       SitesNotDisjoint, ValidationError, config_tag,
                       horizontal_segment, orientation, reflect_instance,
                       reflect_site, validate_instance, vertical_segment)
from .oracle import (CircleSolution, MixedDiscriminant, NoValidCircle, QuadExt,
                     ccw_order_ok, circle_exists, oracle_incircle,
                     solve_voronoi_circle, tangency_point)
from .predicates import (CenterDescriptor, DegenerateConfiguration,
                         UnsupportedConfiguration, descriptor_pps,
                         descriptor_pss_parallel, descriptor_pss_perp,
                         generic_point, generic_segment, incircle,
                         incircle_pppp, incircle_ppps, incircle_ppsp,
                         incircle_ppss, incircle_pssp, incircle_psss,
                         incircle_sssp, incircle_ssss)
from .signs import (BandPosition, DegreeAudit, DegreeTagged, LinearPoly,
                    NegativeDiscriminant, QuadraticPoly, RootChoice,
                    ZeroLeadingCoefficient, band_position, compare_value_to_root,
                    coord, dt, sign_linear_at_root, sign_of)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
