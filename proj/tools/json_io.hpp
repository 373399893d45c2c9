#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "polarmin/body.hpp"
#include "polarmin/lattice.hpp"
#include "polarmin/search.hpp"
#include "polarmin/verify.hpp"

namespace polarmin::io {

using json = nlohmann::json;

/// Exact strings everywhere; with `decimal` set, each rational also gets a
/// "<key>_decimal" sibling rounded to that many digits.
struct Writer {
    std::optional<int> decimal;

    void put(json& obj, const std::string& key, const Rat& r) const;
    json vec(const Vec2& v) const;
    json body(const Body& k) const;
    json cert(const MinimaCert& c) const;
    json report(const Report& r) const;
    json candidate(const Candidate& c) const;
    json search(const SearchResult& r, bool trace) const;
};

/// Throws Error(ParseError) on malformed input.
Rat parse_rat(const json& j);
Vec2 parse_vec(const json& j);
/// Geometric failures keep their own error kinds.
Body parse_body(const json& j);
Body parse_body_text(const std::string& text);

}  // namespace polarmin::io
