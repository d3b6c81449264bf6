#pragma once

// JSON renderings of library results. Every number is a decimal string so
// that arbitrary-precision values survive any consumer.

#include <string>

#include <json.hpp>

#include "clforms/clsets.hpp"
#include "clforms/counting.hpp"
#include "clforms/search.hpp"
#include "clforms/spectral.hpp"

namespace clforms::cli {

using Json = nlohmann::ordered_json;

std::string num(const BigInt& v);
std::string num(const Rational& v);
std::string num(std::uint64_t v);
std::string num(std::int64_t v);
std::string num(unsigned v);

Json params_json(const SpaceParams& sp);
Json vertex_json(const SpaceParams& sp, std::uint64_t key);

Json to_json(const CLVerdict& v, const SpaceParams& sp, Level level);
Json to_json(const SpectralReport& r);
Json to_json(const SearchReport& r);
Json to_json(const DefinitionCensus& c);
Json to_json(const ClassificationBounds& b);
Json to_json(const TrivialityReport& t, const SpaceParams& sp);

/// Compact single-line dump followed by a newline.
std::string render(const Json& j);

}  // namespace clforms::cli
