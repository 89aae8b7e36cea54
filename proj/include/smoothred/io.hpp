#pragma once

#include <optional>
#include <string>

#include "smoothred/noeth.hpp"
#include "smoothred/smooth.hpp"

namespace smoothred {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(std::string msg, int line_, int col_)
      : std::runtime_error(std::move(msg)), line(line_), col(col_) {}
};

struct PresentationFile {
  Presentation pres;
  std::optional<SmoothnessCertificate> cert;
};

// Sectioned text format: [base], [vars], [relators], and the optional
// [certificate.g] / [certificate.u] / [certificate.h] sections. "#" starts
// a line comment; u entries are "i j : <expr>", h entries "j k l : <expr>",
// 1-based; omitted u/h entries are zero.
PresentationFile parse_presentation(const std::string& text);

// Expression grammar shared with the file format: integers, rationals a/b,
// identifiers, + - * / ^, unary minus, parentheses.
Poly parse_poly_expr(const std::string& text, const RingPtr& ring, const VarNames& vars);

RingPtr parse_base_ring(const std::string& text);

std::string emit_presentation(const Presentation& pres, const SmoothnessCertificate* cert);
std::string emit_certificate_sections(const SmoothnessCertificate& cert);

struct CommandResult {
  int exit_code = 0;  // 0 pass, 1 check failed, 2 inconclusive, 3 input error
  std::string out;
  std::string err;
};

CommandResult cmd_verify(const std::string& file_text, bool json);
CommandResult cmd_synth(const std::string& file_text, std::optional<unsigned> max_degree,
                        bool json);
CommandResult cmd_reduce(const std::string& file_text, bool synth_first,
                         std::optional<unsigned> max_degree, bool json);
CommandResult cmd_jacobian(const std::string& file_text);

// Default iterative-deepening cap: 2 * max relator degree + 2.
unsigned default_degree_cap(const Presentation& pres);

}  // namespace smoothred
