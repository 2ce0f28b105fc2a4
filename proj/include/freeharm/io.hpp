#ifndef FREEHARM_IO_HPP
#define FREEHARM_IO_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "freeharm/poly.hpp"

namespace freeharm {

// Parse failure carrying the byte offset of the offending position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Canonical text form: terms in canonical word order, letters rendered as
// x1, x2', h, h', powers with ^, factors separated by spaces. Example:
// "2 x1^2 x2 - 1/2 h^2 + i x1". The zero polynomial prints as "0".
std::string to_string(const FreePoly& p);
std::string to_string(const Word& w);
std::string to_string(const CommPoly& q);

// Grammar (whitespace separates factors, '*' is an optional product sign):
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*
//   factor  := primary ['^' nat]
//   primary := rational | 'i' | letter | '(' expr ')'
//   rational:= nat ['/' nat]
//   letter  := ('x' nat | 'h') ['\'']
// Mode and alphabet size are inferred from the text when not forced: an
// apostrophe anywhere selects nonsymmetric mode, and g defaults to the
// largest variable index that occurs (at least 1).
FreePoly parse_poly(const std::string& text,
                    std::optional<Mode> mode = std::nullopt,
                    std::optional<unsigned> g = std::nullopt);

nlohmann::json poly_to_json(const FreePoly& p);
FreePoly poly_from_json(const nlohmann::json& j);

std::string mode_name(Mode m);
Mode mode_from_name(const std::string& s);

}  // namespace freeharm

#endif
