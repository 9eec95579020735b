#pragma once

// JSON rendering of bound and verification results.
//
// Documents share one top-level layout:
//   {"params": {...}, "bounds": {...}, "fekete": {...}, "verify": {...},
//    "meta": {"seed": ..., "version": ...}}
// Sections that do not apply to a command are omitted.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "biprestar/bounds.hpp"
#include "biprestar/verifier.hpp"

namespace biprestar::report {

inline constexpr const char* kVersion = "0.1.0";

nlohmann::json params_json(const ClassParams& p, std::optional<double> mu);
nlohmann::json bounds_json(const ClassParams& p,
                           const bounds::BoundReport& b);
nlohmann::json fekete_json(const bounds::FeketeSzegoReport& f);
nlohmann::json sample_json(const verifier::SchwarzSample& s);
nlohmann::json verify_json(const verifier::VerifyReport& r);
nlohmann::json meta_json(std::optional<std::uint64_t> seed);

// Pretty-printed with a trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace biprestar::report
