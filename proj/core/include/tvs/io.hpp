#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tvs/bandlimit.hpp"
#include "tvs/graph.hpp"
#include "tvs/oracle.hpp"
#include "tvs/sampling.hpp"
#include "tvs/spectral.hpp"
#include "tvs/types.hpp"

// File formats. All indices are 0-based.
//
//   graph JSON    {"n": 4, "edges": [[i, j, w], ...]}
//   support JSON  {"T": 4, "N": 4, "pairs": [[j_t, j_g], ...]}
//   plan JSON     {"T", "N", "samples": [[t, v], ...], "s_t", "s_g",
//                  "K", "K_T", "K_G", "qualified", "critical"}
//   basis JSON    {"time": [[...], ...], "graph": [[...], ...]}, the reduced
//                 T x K_T and N x K_G bases, rows as arrays
//   signal CSV    N lines of T comma-separated values (line v = vertex v)
//   samples CSV   header "t,v,value", then one line per sample in plan order
namespace tvs::io {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double x);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

std::string support_to_json(const SpectralSupport& s);
SpectralSupport support_from_json(std::string_view text);

std::string plan_to_json(const SamplingPlan& plan, const QualificationReport& report);
SamplingPlan plan_from_json(std::string_view text);

std::string reduced_basis_to_json(const ReducedBasis& basis);
/// The support supplies the dimensions the matrices are checked against.
ReducedBasis reduced_basis_from_json(std::string_view text, const SpectralSupport& support);

std::string matrix_to_csv(const Matrix& m);
Matrix matrix_from_csv(std::string_view text);

std::string signal_to_csv(const JointSignal& x);
JointSignal signal_from_csv(std::string_view text);

std::string samples_to_csv(const SamplingPlan& plan, const Vector& values);
/// Parses a samples file and checks that its points match the plan in
/// order. Missing, extra or reordered rows throw InputError.
Vector samples_from_csv(std::string_view text, const SamplingPlan& plan);

/// Vertex -> time slots table, one line per vertex.
std::string schedule_to_csv(const SamplingPlan& plan);

std::string exhaustive_report_to_json(const oracle::ExhaustiveReport& report,
                                      const SpectralSupport& support);

}  // namespace tvs::io
