// File formats behind the CLI: surface descriptions and blow-up models as
// key = value text, descent states, oracle sequences, and Q-divisor component
// lists. Parse errors carry 1-based line numbers; serializer output parses
// back to an equal value.
#pragma once

#include "delpezzo/descent.hpp"
#include "delpezzo/log_pair.hpp"
#include "delpezzo/surface.hpp"

#include <string>
#include <vector>

namespace delpezzo {

// field (optional modulus of the generator, rationals when absent),
// generator (optional name, default "t"), variables, form.
struct SurfaceDescription {
    FieldPtr field;
    std::vector<std::string> variables;
    MultiPoly form;
};

SurfaceDescription parse_surface_description(const std::string& text);
std::string serialize_surface_description(const SurfaceDescription& d);

// degree plus a quoted point per base point, affine "x, y" or
// projective "x : y : z".
BlowupModel parse_blowup_model(const std::string& text);
std::string serialize_blowup_model(const BlowupModel& m);

// One plane point, affine "x, y" or projective "x : y : z".
PlanePoint parse_plane_point_text(const std::string& text);
std::string plane_point_text(const PlanePoint& p);

// Scalar lines a=, b=, c=, m= in any order, then one "e d" line per
// residual component.
TriangleState parse_descent_state(const std::string& text);
std::string serialize_descent_state(const TriangleState& s);

// One rational per line; '#' starts a comment anywhere.
std::vector<Rational> parse_rational_lines(const std::string& text);
std::string serialize_rational_lines(const std::vector<Rational>& values);

// One component per line:
//   coeff * label : class=(a; b1, ..., bk) ; mult@P=n ; int@P(other)=m ; smooth@P
// The class clause is mandatory and first; the remaining clauses may repeat.
QDivisor parse_qdivisor(const std::string& text);
std::string serialize_qdivisor(const QDivisor& d);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace delpezzo
