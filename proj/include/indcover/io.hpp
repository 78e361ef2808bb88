#pragma once

// Line-based text formats (ASCII, LF):
//
//   GGF graph        ggf 1 / vertices <n> / darts <m> / incidence <v_0> ... /
//                    one "pair <i> <j>" (i < j) or "semi <i>" line per orbit,
//                    ordered by smallest dart id
//   cover file       cover d=<d> r=<r> / sorted vertex ids
//   edges            one "u v" line per edge, u < v, sorted (simple graphs)
//   covering map     covmap <m_source> / dartmap <t_0> ... <t_{m-1}>
//   factorization    factor a=<a> b=<b> / color ... / forward <bits over 2-factor darts>

#include "indcover/cover.hpp"
#include "indcover/covering.hpp"
#include "indcover/factorize.hpp"
#include "indcover/ggraph.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace indcover {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string write_ggf(const GeneralizedGraph& g);
GeneralizedGraph read_ggf(std::string_view text);

std::string write_cover(const CoverCertificate& c);
CoverCertificate read_cover(std::string_view text);

/// Throws GraphError for graphs that are not simple.
std::string write_edges(const GeneralizedGraph& g);
/// n defaults to one past the largest vertex id seen.
GeneralizedGraph read_edges(std::string_view text, std::optional<std::size_t> n = std::nullopt);

std::string write_covmap(const CoveringMap& cm);
std::vector<DartId> read_covmap(std::string_view text);

std::string write_factorization(const Factorization& f);
Factorization read_factorization(std::string_view text);

/// Whitespace-separated vertex ids, any line layout.
std::vector<VertexId> read_vertex_list(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace indcover
