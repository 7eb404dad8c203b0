#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "bj/algebra.hpp"
#include "bj/kmatrix.hpp"
#include "bj/orthograph.hpp"

namespace bj::cli {

using nlohmann::json;

json to_json(const KMatrix& a);
/// Throws InvalidArgument on a malformed document.
KMatrix matrix_from_json(const json& j);

json to_json(const AlgebraSpec& a);
AlgebraSpec algebra_from_json(const json& j);

json to_json(const Chain& c);
Chain chain_from_json(const json& j);

/// "M<n>(<R|C|H>)[/<R|C>]", blocks joined by '+', e.g. "M2(C)+M1(C)/C".
/// The base field defaults to R except for blocks over C, where it must be given.
AlgebraSpec parse_algebra(const std::string& text);
/// Canonical shorthand, always with the base field.
std::string format_algebra(const AlgebraSpec& a);
/// A path to an algebra JSON file or a shorthand string.
AlgebraSpec load_algebra(const std::string& arg);

json read_json(const std::filesystem::path& p);
void write_json(const std::filesystem::path& p, const json& j);

}  // namespace bj::cli
