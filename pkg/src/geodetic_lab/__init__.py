"""Construction, verification and enumeration of geodetic graphs."""

from geodetic_lab.graph import (
    Graph,
    by_name,
    complete,
    cycle,
    from_edge_list,
    hoffman_singleton,
    path,
    petersen,
)
from geodetic_lab.paths import DistanceData, bfs_counts, diameter, distance_data
from geodetic_lab.predicates import (
    MooreParams,
    SrgParams,
    is_block,
    is_geodetic,
    moore_params,
    regular_degree,
    strongly_regular_params,
)

__version__ = "0.1.0"
