#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tropline/builder.hpp"
#include "tropline/exits.hpp"
#include "tropline/lines.hpp"
#include "tropline/surface.hpp"

namespace tropline {

using Json = nlohmann::json;

/// Rationals travel as "p/q" strings; integers are accepted on input.
Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json to_json(const QPoint3& p);
QPoint3 qpoint_from_json(const Json& j);

/// {"delta": d, "lifting": [[x,y,z,"p/q"], ...], "cells": [[[x,y,z] x 4], ...]}
Json triangulation_json(const Subdivision& s, int delta);
Json triangulation_json(const LiftedTriangulation& t, int delta);

/// {"type": "(12)(34)", "v1": [...], "v2": [...]}
Json to_json(const TropicalLine& l);
/// Throws ParseError for malformed input and PreconditionError for an invalid line.
TropicalLine line_from_json(const Json& j);

Json to_json(const CellRef& c);
Json to_json(const LineData& d);
Json to_json(const FamilyWitness& w);
Json surface_json(const SurfaceComplex& x);

/// Axis-parallel box lo <= p <= hi.
struct ClipBox {
    QPoint3 lo;
    QPoint3 hi;
};

/// "x0,y0,z0,x1,y1,z1"
ClipBox parse_clip_box(const std::string& s);
/// "x,y,z" with rational coordinates.
QPoint3 parse_point(const std::string& s);

/// Exact Sutherland-Hodgman clipping of a planar polygon against the box.
std::vector<QPoint3> clip_polygon(std::vector<QPoint3> poly, const ClipBox& box);

/// OFF mesh of the 2-cells: bounded ones only, or with a box every 2-cell
/// (rays truncated beyond the box) clipped to it.
std::string off_export(const SurfaceComplex& x, const std::optional<ClipBox>& box);

/// Contents of the file when `arg` names one, otherwise `arg` itself.
std::string read_text_argument(const std::string& arg);
std::string read_file(const std::string& path);

}  // namespace tropline
