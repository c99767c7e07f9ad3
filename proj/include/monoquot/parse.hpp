#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "monoquot/graph.hpp"
#include "monoquot/monomial.hpp"
#include "monoquot/simplicial.hpp"

namespace mq::text {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

struct ParseResult {
    std::variant<MonomialIdeal, SimplicialComplex, Graph> value;
    std::vector<std::string> warnings;
};

// `ring x1..x5; ideal x1*x2, x2^3*x3;` — `ring a, b, c;` also accepted;
// `ideal;` is the zero ideal, `ideal 1;` the unit ideal.
MonomialIdeal parse_ideal(std::string_view text, std::vector<std::string>* warnings = nullptr);

// `complex on 5: {1,2},{2,3};` — `void` for the void complex, `{}` for the
// complex whose only face is the empty set.
SimplicialComplex parse_complex(std::string_view text);

// Two labeled complex blocks: `big: complex on 3: ...; small: ...;`
std::pair<SimplicialComplex, SimplicialComplex> parse_pair(std::string_view text);

// `graph on 5: 1-2, 2-3;` — duplicate edges merged, loops rejected.
Graph parse_graph(std::string_view text);

// Dispatch on the leading keyword (ring/ideal, complex, graph).
ParseResult parse_any(std::string_view text);

std::string format_ideal(const MonomialIdeal& ideal);
std::string format_complex(const SimplicialComplex& complex);
std::string format_graph(const Graph& graph);
std::string format_monomial(const Monomial& m, const Ring& ring);
std::string format_face(Face f);
std::string format_multidegree(const Multidegree& a);

// `-1,0,2` — comma-separated integers.
Multidegree parse_multidegree(std::string_view text);

} // namespace mq::text
