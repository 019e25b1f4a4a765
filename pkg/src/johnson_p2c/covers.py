"""Endpoint quadruples and two-path cover solutions."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadQuad
from .hamilton import Path


@dataclass(frozen=True)
class EndpointQuad:
    """Four pairwise-distinct vertices paired as (u,v) and (x,y)."""

    u: object
    v: object
    x: object
    y: object

    def vertices(self) -> tuple:
        return (self.u, self.v, self.x, self.y)

    def validate(self, g) -> None:
        vs = self.vertices()
        if len(set(vs)) != 4:
            raise BadQuad(f"endpoints not pairwise distinct: {vs}")
        for w in vs:
            if not g.has_vertex(w):
                raise BadQuad(f"{w} is not a vertex of the host graph")


@dataclass(frozen=True)
class P2CSolution:
    """Two vertex-disjoint paths covering the host graph, one per endpoint pair."""

    path_uv: Path
    path_xy: Path

    def to_json(self) -> dict:
        return {"path_uv": self.path_uv.to_json(), "path_xy": self.path_xy.to_json()}
