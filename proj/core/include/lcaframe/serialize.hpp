#pragma once

#include "lcaframe/certify.hpp"
#include "lcaframe/frame.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace lcaframe {

using Json = nlohmann::ordered_json;

// Parsed frame-system descriptor. Schema problems raise ErrorKind::Schema with
// the offending field path; parameter values are left to the constructors.
struct SystemDescriptor {
  GroupSpec group = GroupSpec::integers();
  ChainParams chain;
  Family family;
  std::optional<ExampleSpec> example;  // charfun proper mode
  std::string shape = "box";           // charfun on R^s
  std::optional<int> k0;
  std::optional<int> k1;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> out;
};

Json parse_json_text(const std::string& text, const std::string& source);

SystemDescriptor parse_descriptor(const Json& j);
Json descriptor_to_json(const SystemDescriptor& d);
FrameSystem build_system(const SystemDescriptor& d);
std::uint64_t fnv1a(const std::string& text);
// FNV-1a of the canonical descriptor text.
std::uint64_t descriptor_hash(const SystemDescriptor& d);

struct LoadedSystem {
  SystemDescriptor descriptor;
  FrameSystem system;
};

// Descriptor plus the filter bank of every level.
Json system_to_json(const SystemDescriptor& d, const FrameSystem& s);
// Accepts a system file or a bare descriptor; stored filters replace the
// constructed ones, so edited files are verified as written.
LoadedSystem system_from_json(const Json& j);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path);
Json point_to_json(const ExactPoint& p);
ExactPoint point_from_json(const Json& j, const std::string& path);
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const std::string& path);

Json domain_to_json(const Domain& d);
Domain domain_from_json(const Json& j, const std::string& path);
Json filter_to_json(const PeriodicFilter& f);
PeriodicFilter filter_from_json(const Json& j, const GroupSpec& group, const std::string& path);
Json sequence_to_json(const Sequence& s);
Sequence sequence_from_json(const Json& j, const std::string& path);
Json chain_to_json(const LatticeChain& c);
Json verification_to_json(const VerificationReport& r);
Json report_to_json(const CertifyReport& r, Suite suite);

std::string format_seed(std::uint64_t seed);
std::uint64_t parse_seed(const std::string& text);

}  // namespace lcaframe
