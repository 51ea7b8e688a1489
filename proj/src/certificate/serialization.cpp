#include <sodium.h>

#include <json.hpp>

#include "lsap/certificate.hpp"

namespace lsap {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFormat = "lsap-certificate";
constexpr int kVersion = 1;

Json pairs_json(const std::vector<Pair>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back({p.row, p.col});
  return out;
}

Json public_json(std::size_t rows, std::size_t cols, const std::vector<Pair>& pairs,
                 std::int64_t optimum, const char* kind) {
  Json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["kind"] = kind;
  j["rows"] = rows;
  j["cols"] = cols;
  j["assignment"] = pairs_json(pairs);
  j["optimum"] = optimum;
  return j;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("certificate is not valid JSON: ") + e.what());
  }
}

template <class F>
auto field(const Json& j, const char* key, F get) {
  if (!j.contains(key)) throw Error(ErrorCode::kParse, std::string("certificate lacks '") + key + "'");
  try {
    return get(j.at(key));
  } catch (const Json::exception&) {
    throw Error(ErrorCode::kParse, std::string("certificate field '") + key + "' is malformed");
  }
}

PublicCertificate read_public_part(const Json& j, const char* expected_kind) {
  if (field(j, "format", [](const Json& x) { return x.get<std::string>(); }) != kFormat ||
      field(j, "version", [](const Json& x) { return x.get<int>(); }) != kVersion) {
    throw Error(ErrorCode::kParse, "unknown certificate format or version");
  }
  if (field(j, "kind", [](const Json& x) { return x.get<std::string>(); }) != expected_kind) {
    throw Error(ErrorCode::kParse, std::string("expected a ") + expected_kind + " certificate");
  }
  PublicCertificate pc;
  pc.rows = field(j, "rows", [](const Json& x) { return x.get<std::size_t>(); });
  pc.cols = field(j, "cols", [](const Json& x) { return x.get<std::size_t>(); });
  pc.optimum = field(j, "optimum", [](const Json& x) { return x.get<std::int64_t>(); });
  pc.assignment = field(j, "assignment", [](const Json& x) {
    std::vector<Pair> out;
    for (const auto& p : x) {
      if (p.size() != 2) throw Error(ErrorCode::kParse, "assignment entries are [row, col]");
      out.push_back({p[0].get<std::size_t>(), p[1].get<std::size_t>()});
    }
    return out;
  });
  return pc;
}

std::string sha256_hex(const std::string& data) {
  if (sodium_init() < 0) throw Error(ErrorCode::kInternal, "libsodium failed to initialise");
  unsigned char digest[crypto_hash_sha256_BYTES];
  crypto_hash_sha256(digest, reinterpret_cast<const unsigned char*>(data.data()), data.size());
  char hex[2 * crypto_hash_sha256_BYTES + 1];
  sodium_bin2hex(hex, sizeof hex, digest, sizeof digest);
  return hex;
}

}  // namespace

std::string to_public_json(const OptimalityCertificate& cert) {
  return public_json(cert.weights.rows(), cert.weights.cols(), cert.assignment.pairs,
                     cert.optimum, "public")
      .dump();
}

std::string to_witness_json(const OptimalityCertificate& cert) {
  Json j = public_json(cert.weights.rows(), cert.weights.cols(), cert.assignment.pairs,
                       cert.optimum, "witness");
  j["sense"] = to_string(cert.weights.sense());
  j["bit_length"] = cert.weights.bit_length();
  Json rows = Json::array();
  for (std::size_t i = 0; i < cert.weights.rows(); ++i) {
    const auto r = cert.weights.row(i);
    rows.push_back(std::vector<std::int64_t>(r.begin(), r.end()));
  }
  j["weights"] = rows;
  j["u"] = cert.dual.u;
  j["v"] = cert.dual.v;
  return j.dump();
}

PublicCertificate parse_public_certificate(const std::string& text) {
  const Json j = parse(text);
  for (const char* secret : {"weights", "u", "v"}) {
    if (j.contains(secret)) {
      throw Error(ErrorCode::kParse, std::string("public certificate must not carry '") + secret + "'");
    }
  }
  return read_public_part(j, "public");
}

OptimalityCertificate parse_witness_certificate(const std::string& text) {
  const Json j = parse(text);
  const PublicCertificate pc = read_public_part(j, "witness");
  const Sense sense = parse_sense(field(j, "sense", [](const Json& x) { return x.get<std::string>(); }));
  const int bits = field(j, "bit_length", [](const Json& x) { return x.get<int>(); });
  const auto rows = field(j, "weights", [](const Json& x) {
    return x.get<std::vector<std::vector<std::int64_t>>>();
  });
  if (rows.size() != pc.rows || rows.empty() || rows.front().size() != pc.cols) {
    throw Error(ErrorCode::kParse, "weights do not match rows/cols");
  }
  OptimalityCertificate cert;
  cert.weights = WeightMatrix::from_rows(rows, sense, bits);
  cert.optimum = pc.optimum;
  cert.assignment.pairs = pc.assignment;
  std::int64_t total = 0;
  for (const auto& p : pc.assignment) {
    if (p.row < pc.rows && p.col < pc.cols) total += cert.weights(p.row, p.col);
  }
  cert.assignment.cost = total;
  cert.dual.u = field(j, "u", [](const Json& x) { return x.get<std::vector<std::int64_t>>(); });
  cert.dual.v = field(j, "v", [](const Json& x) { return x.get<std::vector<std::int64_t>>(); });
  return cert;
}

std::string certificate_id(const OptimalityCertificate& cert) {
  return sha256_hex(to_public_json(cert));
}

std::string certificate_id(const PublicCertificate& cert) {
  return sha256_hex(public_json(cert.rows, cert.cols, cert.assignment, cert.optimum, "public").dump());
}

}  // namespace lsap
