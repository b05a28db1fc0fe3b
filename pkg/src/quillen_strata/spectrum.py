"""Assembly of stratified spectra and their serialization.

Two assemblies of the same space: the strong form glues Weyl-orbit quotients
of strata as a disjoint union and attaches specialization edges; the weak
form computes the colimit of the full per-subgroup spectra over the orbit
category.  Both are finite labeled posets; check_agreement searches for a
label/stratum/edge-preserving isomorphism between them.

JSON schema "quillen-strata/1": {schema, meta: {group, theory, family,
bounds, mode, truncated}, points: [{id, stratum, label, closed}],
edges: [{from, to, kind, provenance}]}.  Output is deterministic and
integer/string-only, so golden-file comparisons are byte-exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .groups import subgroups_up_to_conjugacy
from .orbit_cat import OrbitDiagram, build_orbit_category, colimit
from .rings import cyclic_spectrum_ring
from .strata import (UnsupportedTheory, stratum, theory_family_classes,
                     transition_map)

SCHEMA = "quillen-strata/1"


@dataclass(frozen=True)
class SpacePoint:
    id: str
    stratum: str
    label: str
    closed: bool
    descriptor: object = field(default=None, compare=False, repr=False)
    stratum_order: int = field(default=0, compare=False, repr=False)
    local_id: str = field(default="", compare=False, repr=False)


@dataclass(frozen=True)
class SpaceEdge:
    src: str
    dst: str
    kind: str            # internal | cross-stratum | external
    provenance: str = ""


@dataclass
class StratifiedSpace:
    meta: dict
    points: list
    edges: list
    order_complete: bool = field(default=True, compare=False)

    def point(self, pid):
        for pt in self.points:
            if pt.id == pid:
                return pt
        raise KeyError(pid)

    def closed_points(self):
        return [pt for pt in self.points if pt.closed]

    def solid_edges(self):
        return [e for e in self.edges if e.kind != "external"]

    def strata_keys(self):
        return sorted({pt.stratum for pt in self.points})


def _class_keys(members):
    """Canonical stratum key per family class: o<order>.<i> within equal orders."""
    counts = {}
    keys = {}
    for cls in members:
        i = counts.get(cls.order, 0)
        counts[cls.order] = i + 1
        keys[cls.index] = "o%d.%d" % (cls.order, i)
    return keys


def _meta(theory, group_label, mode, truncated):
    return {
        "group": group_label,
        "theory": theory.name,
        "family": theory.family().name,
        "bounds": {"prime": theory.prime_bound, "degree": theory.degree_bound},
        "mode": mode,
        "truncated": truncated,
    }


def assemble_strong(theory, G, group_label=""):
    """Disjoint union of Weyl-orbit quotients of strata with specialization edges."""
    classes = subgroups_up_to_conjugacy(G)
    members = theory_family_classes(theory, G, classes)
    keys = _class_keys(members)
    points = []
    edges = []
    truncated = False
    descriptors = {}   # descriptor data -> point id (for ring containments)
    trivial_key = None
    stratum_orders = {}
    for cls in members:
        model = stratum(theory, G, cls)
        if model.is_empty():
            continue
        skey = keys[cls.index]
        stratum_orders[skey] = cls.order
        if cls.order == 1:
            trivial_key = skey
        truncated = truncated or model.truncated
        rep_of = {}
        for orb in model.orbits():
            for i in orb:
                rep_of[i] = orb[0]
        for orb in model.orbits():
            rp = model.points[orb[0]]
            pid = "%s:%s" % (skey, rp.local_id)
            points.append(SpacePoint(
                id=pid, stratum=skey, label=rp.label, closed=rp.closed,
                descriptor=rp.descriptor, stratum_order=cls.order,
                local_id=rp.local_id))
            descriptors[(skey, rp.descriptor.data)] = pid
            descriptors.setdefault(rp.descriptor.data, pid)
        seen = set()
        for (i, j) in model.internal_edges:
            a, b = rep_of[i], rep_of[j]
            if a == b:
                continue
            pair = ("%s:%s" % (skey, model.points[a].local_id),
                    "%s:%s" % (skey, model.points[b].local_id))
            if pair not in seen:
                seen.add(pair)
                edges.append(SpaceEdge(pair[0], pair[1], "internal"))
    order_complete = True

    if theory.kind == "height1":
        closed_id = "%s:F_%d" % (trivial_key, theory.p)
        for pt in points:
            if pt.stratum != trivial_key:
                edges.append(SpaceEdge(pt.id, closed_id, "cross-stratum"))
    elif theory.kind == "ku":
        if G.is_cyclic():
            ring = cyclic_spectrum_ring(G.order, theory.prime_bound)
            existing = {(e.src, e.dst) for e in edges}
            for (i, j) in ring.contains:
                src = descriptors[ring.minimal[i].data]
                dst = descriptors[ring.maximal[j].data]
                if (src, dst) in existing:
                    continue
                existing.add((src, dst))
                src_stratum = src.split(":", 1)[0]
                dst_stratum = dst.split(":", 1)[0]
                kind = "internal" if src_stratum == dst_stratum else "cross-stratum"
                edges.append(SpaceEdge(src, dst, kind))
        else:
            # only the point set is assembled beyond cyclic groups
            order_complete = False
    elif theory.kind == "hz":
        ordered = sorted(stratum_orders.items(), key=lambda kv: kv[1])
        for (skey, order), (prev_key, prev_order) in zip(ordered[1:], ordered):
            src = "%s:gen" % skey
            if prev_order == 1:
                dst = "%s:q%d" % (prev_key, theory.p)
            else:
                dst = "%s:t" % prev_key
            edges.append(SpaceEdge(src, dst, "external", "Balmer-Gallauer"))
    elif theory.kind == "modp":
        order_complete = len(members) <= 1
    # kr: single stratum, internal edges already complete

    points.sort(key=lambda pt: pt.id)
    edges.sort(key=lambda e: (e.src, e.dst, e.kind, e.provenance))
    space = StratifiedSpace(
        meta=_meta(theory, group_label, "strong", truncated),
        points=points, edges=edges, order_complete=order_complete)
    _check_disjointness(space)
    return space


def _check_disjointness(space):
    seen = set()
    for pt in space.points:
        if pt.id in seen:
            raise UnsupportedTheory("duplicate point id %s" % pt.id)
        seen.add(pt.id)


def assemble_weak(theory, G, group_label=""):
    """Colimit of full per-subgroup spectra over the Quillen orbit category."""
    if not theory.has_transition_maps():
        raise UnsupportedTheory(
            "theory %s has no transition maps; weak assembly unavailable"
            % theory.name)
    classes = subgroups_up_to_conjugacy(G)
    members = theory_family_classes(theory, G, classes)
    keys = _class_keys(members)
    cat = build_orbit_category(G, members)
    spaces = {}
    point_index = {}
    for i, cls in enumerate(members):
        spaces[i] = assemble_strong(theory, cls.as_group(),
                                    group_label="%s|%s" % (group_label, keys[cls.index]))
        point_index[i] = {pt.id: pt for pt in spaces[i].points}
    maps = {}
    for m in cat.all_morphisms():
        maps[m.key()] = transition_map(
            theory, m, members[m.src], members[m.dst],
            spaces[m.src].points, spaces[m.dst].points)
    diagram = OrbitDiagram(
        category=cat,
        point_sets={i: tuple(pt.id for pt in spaces[i].points)
                    for i in range(len(members))},
        maps=maps)
    result = colimit(diagram)

    weak_points = []
    proj_id = {}
    for cid, ms in result.classes:
        # the members lying in the V^+ part of their object form one Weyl
        # orbit inside a single stratum (disjointness of the decomposition)
        owners = [(i, pid) for (i, pid) in ms
                  if point_index[i][pid].stratum_order == members[i].order]
        if len({i for (i, _) in owners}) != 1:
            raise UnsupportedTheory(
                "colimit class %r meets %d strata" % (cid, len({i for i, _ in owners})))
        oi, opid = min(owners)
        opt = point_index[oi][opid]
        wid = min("%s|%s" % (keys[members[i].index], pid) for (i, pid) in ms)
        wpt = SpacePoint(
            id=wid, stratum=keys[members[oi].index], label=opt.label,
            closed=opt.closed, descriptor=opt.descriptor,
            stratum_order=members[oi].order, local_id=opt.local_id)
        weak_points.append(wpt)
        for mkey in ms:
            proj_id[mkey] = wid

    weak_edges = {}
    for i in range(len(members)):
        for e in spaces[i].edges:
            src = proj_id[(i, e.src)]
            dst = proj_id[(i, e.dst)]
            if src == dst:
                continue
            if e.kind == "external":
                weak_edges[(src, dst, "external")] = SpaceEdge(
                    src, dst, "external", e.provenance)
                continue
            sstr = next(pt.stratum for pt in weak_points if pt.id == src)
            dstr = next(pt.stratum for pt in weak_points if pt.id == dst)
            kind = "internal" if sstr == dstr else "cross-stratum"
            weak_edges[(src, dst, kind)] = SpaceEdge(src, dst, kind)

    truncated = any(spaces[i].meta["truncated"] for i in spaces)
    weak_points.sort(key=lambda pt: pt.id)
    edges = sorted(weak_edges.values(),
                   key=lambda e: (e.src, e.dst, e.kind, e.provenance))
    space = StratifiedSpace(
        meta=_meta(theory, group_label, "weak", truncated),
        points=weak_points, edges=edges,
        order_complete=all(spaces[i].order_complete for i in spaces))
    _check_disjointness(space)
    return space


# -- isomorphism check ---------------------------------------------------------

@dataclass(frozen=True)
class SpaceIsoReport:
    isomorphic: bool
    witness: dict = None
    obstruction: str = ""


def _invariant_multiset(space, with_degrees):
    inv = {}
    if with_degrees:
        indeg = {pt.id: 0 for pt in space.points}
        outdeg = {pt.id: 0 for pt in space.points}
        for e in space.solid_edges():
            outdeg[e.src] += 1
            indeg[e.dst] += 1
        for pt in space.points:
            key = (pt.stratum, pt.label, pt.closed, indeg[pt.id], outdeg[pt.id])
            inv.setdefault(key, []).append(pt.id)
    else:
        for pt in space.points:
            key = (pt.stratum, pt.label, pt.closed)
            inv.setdefault(key, []).append(pt.id)
    return inv


def check_agreement(strong, weak):
    """Search for a label/stratum/edge-kind-preserving isomorphism of posets.

    External (dashed) edges are excluded from the order comparison; edge sets
    are compared only when both assemblies computed a complete order.
    """
    compare_edges = strong.order_complete and weak.order_complete
    inv_s = _invariant_multiset(strong, compare_edges)
    inv_w = _invariant_multiset(weak, compare_edges)
    if {k: len(v) for k, v in inv_s.items()} != {k: len(v) for k, v in inv_w.items()}:
        kind = ("degree sequence mismatch" if compare_edges
                else "label multiset mismatch")
        if not compare_edges or _invariant_multiset(strong, False).keys() \
                != _invariant_multiset(weak, False).keys():
            kind = "label multiset mismatch"
        return SpaceIsoReport(False, obstruction=kind)

    edge_s = {(e.src, e.dst) for e in strong.solid_edges()}
    edge_w = {(e.src, e.dst) for e in weak.solid_edges()}
    order = [pid for key in sorted(inv_s) for pid in sorted(inv_s[key])]
    cands = {}
    for key in sorted(inv_s):
        for pid in inv_s[key]:
            cands[pid] = sorted(inv_w[key])

    assignment = {}
    used = set()

    def consistent(sid, wid):
        if not compare_edges:
            return True
        for aid, bid in assignment.items():
            if ((sid, aid) in edge_s) != ((wid, bid) in edge_w):
                return False
            if ((aid, sid) in edge_s) != ((bid, wid) in edge_w):
                return False
        return True

    def backtrack(k):
        if k == len(order):
            return True
        sid = order[k]
        for wid in cands[sid]:
            if wid in used or not consistent(sid, wid):
                continue
            assignment[sid] = wid
            used.add(wid)
            if backtrack(k + 1):
                return True
            del assignment[sid]
            used.remove(wid)
        return False

    if backtrack(0):
        return SpaceIsoReport(True, witness=dict(assignment))
    return SpaceIsoReport(False, obstruction="exhausted search")


# -- serialization -------------------------------------------------------------

def to_document(space):
    return {
        "schema": SCHEMA,
        "meta": space.meta,
        "points": [
            {"id": pt.id, "stratum": pt.stratum, "label": pt.label,
             "closed": pt.closed}
            for pt in sorted(space.points, key=lambda p: p.id)],
        "edges": [
            {"from": e.src, "to": e.dst, "kind": e.kind,
             "provenance": e.provenance}
            for e in sorted(space.edges,
                            key=lambda e: (e.src, e.dst, e.kind, e.provenance))],
    }


def serialize(space, fmt="json"):
    if fmt == "json":
        return json.dumps(to_document(space), sort_keys=True, indent=2) + "\n"
    if fmt == "dot":
        return to_dot(space)
    if fmt == "table":
        return to_table(space)
    raise ValueError("unknown format %r" % (fmt,))


def to_dot(space):
    lines = ["digraph spectrum {"]
    for pt in sorted(space.points, key=lambda p: p.id):
        shape = ' shape=box' if pt.closed else ""
        lines.append('  "%s" [label="%s [%s]"%s];' % (pt.id, pt.label, pt.stratum, shape))
    for e in sorted(space.edges, key=lambda e: (e.src, e.dst, e.kind, e.provenance)):
        style = " [style=dashed]" if e.kind == "external" else ""
        lines.append('  "%s" -> "%s"%s;' % (e.src, e.dst, style))
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_table(space):
    lines = ["# %s" % json.dumps(space.meta, sort_keys=True)]
    lines.append("points (%d):" % len(space.points))
    for pt in sorted(space.points, key=lambda p: p.id):
        flag = "closed" if pt.closed else "generic"
        lines.append("  %-28s %-20s %-8s stratum=%s" % (pt.id, pt.label, flag, pt.stratum))
    lines.append("edges (%d):" % len(space.edges))
    for e in sorted(space.edges, key=lambda e: (e.src, e.dst, e.kind)):
        prov = " (%s)" % e.provenance if e.provenance else ""
        lines.append("  %s -> %s [%s]%s" % (e.src, e.dst, e.kind, prov))
    return "\n".join(lines) + "\n"


def deserialize(text):
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ValueError("unknown schema %r" % (doc.get("schema"),))
    points = []
    for p in doc["points"]:
        skey = p["stratum"]
        order = int(skey[1:].split(".", 1)[0]) if skey.startswith("o") else 0
        local = p["id"].split(":", 1)[1] if ":" in p["id"] else p["id"]
        points.append(SpacePoint(
            id=p["id"], stratum=skey, label=p["label"], closed=p["closed"],
            stratum_order=order, local_id=local))
    edges = [SpaceEdge(e["from"], e["to"], e["kind"], e.get("provenance", ""))
             for e in doc["edges"]]
    points.sort(key=lambda pt: pt.id)
    edges.sort(key=lambda e: (e.src, e.dst, e.kind, e.provenance))
    return StratifiedSpace(meta=doc["meta"], points=points, edges=edges)
