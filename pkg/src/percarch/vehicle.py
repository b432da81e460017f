"""Parametric vehicle geometry: mountable surface regions and ground-plane FOV zones.

Ten mount regions (A-J) are laid out from the vehicle's critical dimensions:
A front bumper, B/C front fenders, D/E roof edges behind the windshield top,
F/G doors (never placeable), H/I rear fenders, J rear bumper. Each placeable
region carries a 2 cm placement grid over its surface patch.

Ten FOV zones tile the ground plane around the ego footprint at lane scale:
front near/far, front-left/right, both sides, both rear blindspots, and rear
near/far. Zone geometry is parametric in the vehicle length and the lane
width and can be overridden via config.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidDimensionsError, OutOfBoundsError, PlacementForbiddenError
from .geometry import bearing_of, polygon_area, polygon_grid_samples, polygon_is_simple, points_in_polygon

FEATURES = ("ACC", "FCW", "LKA", "BW")

LANE_WIDTH = 3.5  # meters, default lane scale for all zones

REGION_IDS = ("A", "B", "C", "D", "E", "F", "G", "H", "I", "J")
NON_PLACEABLE = frozenset({"F", "G"})

DEFAULT_GRID_STEP = 0.02  # meters, placement grid pitch on every region

# Zone ids each ADAS feature relies on (overridable via config).
DEFAULT_FEATURE_ZONES = {
    "ACC": frozenset({1, 2}),
    "FCW": frozenset({1, 2, 3, 4}),
    "LKA": frozenset({1, 3, 4, 5, 6}),
    "BW": frozenset({5, 6, 7, 8}),
}

# Mount regions each feature's sensors plausibly live on (informational map).
DEFAULT_FEATURE_REGIONS = {
    "ACC": frozenset({"A", "B", "C", "D", "E"}),
    "FCW": frozenset({"A", "B", "C", "D", "E"}),
    "LKA": frozenset({"A", "B", "C", "D", "E", "H", "I"}),
    "BW": frozenset({"B", "C", "D", "E", "H", "I", "J"}),
}

# Longitudinal horizons (meters) measured from the respective bumper.
ZONE_HORIZONS = {
    "front_near": 30.0,
    "front_far": 100.0,
    "side_front": 30.0,
    "blindspot": 10.0,
    "rear_near": 30.0,
    "rear_far": 70.0,
}

COVERAGE_SAMPLE_STEP = 0.5  # meters, zone coverage sampling grid
COVERAGE_SAMPLE_HEIGHT = 0.7  # meters, representative target mid-body height


@dataclass(frozen=True)
class VehicleModel:
    """Critical dimensions of a target vehicle (meters)."""

    name: str
    length: float
    width: float
    height: float
    wheelbase: float

    def __post_init__(self):
        dims = (self.length, self.width, self.height, self.wheelbase)
        if any(not (d > 0) for d in dims):
            raise InvalidDimensionsError(f"{self.name}: all dimensions must be positive, got {dims}")
        if not self.wheelbase < self.length:
            raise InvalidDimensionsError(f"{self.name}: wheelbase {self.wheelbase} must be < length {self.length}")
        if not self.width < self.length:
            raise InvalidDimensionsError(f"{self.name}: width {self.width} must be < length {self.length}")


@dataclass(frozen=True)
class MountRegion:
    """A surface patch where sensors may be placed on a fixed 2D grid.

    The patch is origin + i*step*u_axis + j*step*v_axis in the vehicle frame.
    outward_normal doubles as the default sensor boresight for the region.
    """

    id: str
    placeable: bool
    origin: np.ndarray
    u_axis: np.ndarray
    v_axis: np.ndarray
    outward_normal: np.ndarray
    u_extent: float
    v_extent: float
    grid_step: float = DEFAULT_GRID_STEP

    def __post_init__(self):
        for name, vec in (("u_axis", self.u_axis), ("v_axis", self.v_axis), ("outward_normal", self.outward_normal)):
            if abs(np.linalg.norm(vec) - 1.0) > 1e-9:
                raise ValueError(f"region {self.id}: {name} must be a unit vector")
        if abs(float(np.dot(self.u_axis, self.v_axis))) > 1e-9:
            raise ValueError(f"region {self.id}: u_axis and v_axis must be orthogonal")
        if not self.grid_step > 0:
            raise ValueError(f"region {self.id}: grid_step must be positive")
        if self.id in NON_PLACEABLE and self.placeable:
            raise ValueError(f"region {self.id} is exempt from sensor placement")

    @property
    def grid_shape(self) -> tuple[int, int]:
        """(n_u, n_v) grid point counts along each patch axis."""
        return (
            int(math.floor(self.u_extent / self.grid_step + 1e-9)) + 1,
            int(math.floor(self.v_extent / self.grid_step + 1e-9)) + 1,
        )

    @property
    def grid_size(self) -> int:
        nu, nv = self.grid_shape
        return nu * nv

    @property
    def boresight_azimuth_deg(self) -> float:
        """Default aim bearing: azimuth of the outward normal (0 = ahead, + = left)."""
        return bearing_of(self.outward_normal[:2])


@dataclass(frozen=True)
class FovZone:
    """One ground-plane perception zone in the ego frame."""

    id: int
    polygon: np.ndarray  # (M, 2) ordered vertices, ego frame (x left, y forward)
    features: frozenset

    def __post_init__(self):
        poly = np.asarray(self.polygon, dtype=float)
        if poly.ndim != 2 or poly.shape[0] < 3 or poly.shape[1] != 2:
            raise ValueError(f"zone {self.id}: polygon needs >= 3 planar vertices")
        if not polygon_is_simple(poly):
            raise ValueError(f"zone {self.id}: polygon is self-intersecting")
        if abs(polygon_area(poly)) < 1e-9:
            raise ValueError(f"zone {self.id}: polygon is degenerate")
        bad = set(self.features) - set(FEATURES)
        if bad:
            raise ValueError(f"zone {self.id}: unknown features {sorted(bad)}")

    def contains(self, points) -> np.ndarray:
        """Membership test for ego-frame planar points; boundary counts as inside."""
        return points_in_polygon(points, self.polygon)


@dataclass(frozen=True)
class FeatureZoneRegionMap:
    """Which zones and mount regions matter to each ADAS feature."""

    feature_to_zones: dict
    feature_to_regions: dict

    def validate(self, regions: dict, zones: dict) -> None:
        for feat in FEATURES:
            if feat not in self.feature_to_zones or not self.feature_to_zones[feat]:
                raise ValueError(f"feature {feat} maps to no zone")
            missing = set(self.feature_to_zones[feat]) - set(zones)
            if missing:
                raise ValueError(f"feature {feat} references unknown zones {sorted(missing)}")
            for rid in self.feature_to_regions.get(feat, ()):
                if rid not in regions:
                    raise ValueError(f"feature {feat} references unknown region {rid}")
                if not regions[rid].placeable:
                    raise ValueError(f"feature {feat} maps to non-placeable region {rid}")


@dataclass(frozen=True)
class VehicleGeometry:
    """A vehicle model with its mount regions, FOV zones, and feature map."""

    model: VehicleModel
    regions: dict
    zones: dict
    feature_map: FeatureZoneRegionMap

    @property
    def placeable_regions(self) -> list:
        return [r for r in self.regions.values() if r.placeable]


def _unit(x, y, z=0.0) -> np.ndarray:
    v = np.array([x, y, z], dtype=float)
    return v / np.linalg.norm(v)


def build_regions(model: VehicleModel, grid_step: float = DEFAULT_GRID_STEP) -> dict:
    """Default A-J mount region layout scaled to the vehicle dimensions."""
    L, W, H = model.length, model.width, model.height
    s2 = math.sqrt(0.5)
    ux, uz = np.array([1.0, 0.0, 0.0]), np.array([0.0, 0.0, 1.0])
    uy = np.array([0.0, 1.0, 0.0])

    def region(rid, origin, u_axis, v_axis, normal, u_ext, v_ext):
        return MountRegion(
            id=rid,
            placeable=rid not in NON_PLACEABLE,
            origin=np.asarray(origin, dtype=float),
            u_axis=np.asarray(u_axis, dtype=float),
            v_axis=np.asarray(v_axis, dtype=float),
            outward_normal=np.asarray(normal, dtype=float),
            u_extent=u_ext,
            v_extent=v_ext,
            grid_step=grid_step,
        )

    fender_u, fender_v = 0.4, 0.2  # meters, corner patch extents
    regions = {
        # front bumper: full width x 0.3 m band, aimed straight ahead
        "A": region("A", (-W / 2, L / 2, 0.25 * H), ux, uz, uy, W, 0.3),
        # front fenders: diagonal corner patches aimed 45 deg outward
        "B": region("B", (W / 2 - 0.30, L / 2 - 0.10, 0.45 * H), _unit(s2, -s2), uz, _unit(s2, s2), fender_u, fender_v),
        "C": region("C", (-W / 2 + 0.30, L / 2 - 0.10, 0.45 * H), _unit(-s2, -s2), uz, _unit(-s2, s2), fender_u, fender_v),
        # roof edges behind the windshield top, aimed ahead
        "D": region("D", (0.35 * W, -0.05 * L, 0.95 * H), uy, -ux, uy, 0.3 * L, 0.15 * W),
        "E": region("E", (-0.35 * W, -0.05 * L, 0.95 * H), uy, ux, uy, 0.3 * L, 0.15 * W),
        # doors: geometry modeled but placement forbidden
        "F": region("F", (W / 2, -0.3 * L, 0.3 * H), uy, uz, ux, 0.25 * L, 0.3),
        "G": region("G", (-W / 2, -0.3 * L, 0.3 * H), uy, uz, -ux, 0.25 * L, 0.3),
        # rear fenders: mirrored corner patches aimed 45 deg outward-rear
        "H": region("H", (W / 2 - 0.30, -L / 2 + 0.10, 0.45 * H), _unit(s2, s2), uz, _unit(s2, -s2), fender_u, fender_v),
        "I": region("I", (-W / 2 + 0.30, -L / 2 + 0.10, 0.45 * H), _unit(-s2, s2), uz, _unit(-s2, -s2), fender_u, fender_v),
        # rear bumper, aimed straight back
        "J": region("J", (-W / 2, -L / 2, 0.25 * H), ux, uz, -uy, W, 0.3),
    }
    return regions


def build_zones(model: VehicleModel, lane_width: float = LANE_WIDTH,
                horizons: dict | None = None, feature_zones: dict | None = None) -> dict:
    """Default 10-zone layout: lane-width rectangles keyed off the bumpers."""
    hz = dict(ZONE_HORIZONS)
    if horizons:
        hz.update(horizons)
    fz = feature_zones or DEFAULT_FEATURE_ZONES
    L = model.length
    w = lane_width
    front, rear = L / 2, -L / 2

    def rect(x0, x1, y0, y1):
        return np.array([[x0, y0], [x1, y0], [x1, y1], [x0, y1]], dtype=float)

    boxes = {
        1: rect(-w / 2, w / 2, front, front + hz["front_near"]),
        2: rect(-w / 2, w / 2, front + hz["front_near"], front + hz["front_far"]),
        3: rect(w / 2, 3 * w / 2, front, front + hz["side_front"]),
        4: rect(-3 * w / 2, -w / 2, front, front + hz["side_front"]),
        5: rect(w / 2, 3 * w / 2, rear, front),
        6: rect(-3 * w / 2, -w / 2, rear, front),
        7: rect(w / 2, 3 * w / 2, rear - hz["blindspot"], rear),
        8: rect(-3 * w / 2, -w / 2, rear - hz["blindspot"], rear),
        9: rect(-w / 2, w / 2, rear - hz["rear_near"], rear),
        10: rect(-w / 2, w / 2, rear - hz["rear_far"], rear - hz["rear_near"]),
    }
    zone_features = {zid: frozenset(f for f in FEATURES if zid in fz[f]) for zid in boxes}
    return {zid: FovZone(id=zid, polygon=poly, features=zone_features[zid]) for zid, poly in boxes.items()}


def build_vehicle(name: str, length: float, width: float, height: float, wheelbase: float,
                  *, lane_width: float = LANE_WIDTH, grid_step: float = DEFAULT_GRID_STEP,
                  zone_overrides: dict | None = None,
                  feature_zones: dict | None = None,
                  feature_regions: dict | None = None) -> VehicleGeometry:
    """Build a vehicle with its default region and zone layouts.

    zone_overrides maps zone id -> (M, 2) vertex array replacing the default
    polygon; feature_zones / feature_regions replace the default feature maps.
    """
    model = VehicleModel(name=name, length=length, width=width, height=height, wheelbase=wheelbase)
    regions = build_regions(model, grid_step=grid_step)
    fz = {k: frozenset(v) for k, v in (feature_zones or DEFAULT_FEATURE_ZONES).items()}
    zones = build_zones(model, lane_width=lane_width, feature_zones=fz)
    if zone_overrides:
        for zid, poly in zone_overrides.items():
            zid = int(zid)
            if zid not in zones:
                raise ValueError(f"zone override references unknown zone {zid}")
            zones[zid] = FovZone(id=zid, polygon=np.asarray(poly, dtype=float), features=zones[zid].features)
    fmap = FeatureZoneRegionMap(
        feature_to_zones=fz,
        feature_to_regions={k: frozenset(v) for k, v in (feature_regions or DEFAULT_FEATURE_REGIONS).items()},
    )
    fmap.validate(regions, zones)
    return VehicleGeometry(model=model, regions=regions, zones=zones, feature_map=fmap)


def vehicle_from_config(cfg: dict) -> VehicleGeometry:
    """Build a vehicle from a parsed config mapping.

    Recognized keys: name, length, width, height, wheelbase, and optional
    lane_width, grid_step, zone_overrides, feature_zones, feature_regions.
    """
    required = {"name", "length", "width", "height", "wheelbase"}
    missing = required - set(cfg)
    if missing:
        raise ValueError(f"vehicle config missing keys {sorted(missing)}")
    allowed = required | {"lane_width", "grid_step", "zone_overrides", "feature_zones", "feature_regions"}
    unknown = set(cfg) - allowed
    if unknown:
        raise ValueError(f"vehicle config has unknown keys {sorted(unknown)}")
    kwargs = {}
    for opt in ("lane_width", "grid_step", "zone_overrides", "feature_zones", "feature_regions"):
        if opt in cfg:
            kwargs[opt] = cfg[opt]
    return build_vehicle(cfg["name"], float(cfg["length"]), float(cfg["width"]),
                         float(cfg["height"]), float(cfg["wheelbase"]), **kwargs)


def surface_point(region: MountRegion, i: int, j: int) -> np.ndarray:
    """Vehicle-frame 3D point of grid node (i, j) on a placeable region."""
    if not region.placeable:
        raise PlacementForbiddenError(f"region {region.id} is exempt from sensor placement")
    nu, nv = region.grid_shape
    if not (0 <= i < nu and 0 <= j < nv):
        raise OutOfBoundsError(f"region {region.id}: grid index ({i}, {j}) outside {nu}x{nv} grid")
    return region.origin + i * region.grid_step * region.u_axis + j * region.grid_step * region.v_axis


def zone_membership(point, zones: dict) -> set:
    """Ids of all zones whose polygon contains the ego-frame point (boundary inclusive)."""
    p = np.asarray(point, dtype=float)
    return {zid for zid, zone in zones.items() if zone.contains(p)}


def zone_samples(zone: FovZone, step: float = COVERAGE_SAMPLE_STEP) -> np.ndarray:
    """Coverage sample points of a zone, lifted to the reference target height."""
    pts = polygon_grid_samples(zone.polygon, step)
    return np.column_stack([pts, np.full(len(pts), COVERAGE_SAMPLE_HEIGHT)])


def zone_coverage(sensors, zones: dict, step: float = COVERAGE_SAMPLE_STEP) -> dict:
    """Fraction of each zone's sample grid inside at least one sensor frustum.

    Sensors must expose covers(points) -> bool mask over (N, 3) points; see
    sensing.PlacedSensor. No sensors means every fraction is 0.
    """
    out = {}
    for zid, zone in zones.items():
        pts = zone_samples(zone, step)
        if len(pts) == 0:
            out[zid] = 0.0
            continue
        covered = np.zeros(len(pts), dtype=bool)
        for sensor in sensors:
            if covered.all():
                break
            covered |= sensor.covers(pts)
        out[zid] = float(np.count_nonzero(covered)) / len(pts)
    return out


def export_zones_csv(zones: dict, path) -> None:
    """Write zone polygons as rows (zone_id, vertex_index, x, y) for plotting."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["zone_id", "vertex_index", "x", "y"])
        for zid in sorted(zones):
            for k, (x, y) in enumerate(zones[zid].polygon):
                writer.writerow([zid, k, f"{x:.17g}", f"{y:.17g}"])
