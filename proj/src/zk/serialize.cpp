#include "lsap/zk/serialize.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "lsap/error.hpp"

namespace lsap::zk {
namespace {

constexpr char kMagic[8] = {'L', 'S', 'A', 'P', 'Z', 'K', 'P', '1'};
// Bounds that keep a hostile length field from allocating absurd amounts.
constexpr std::uint64_t kMaxSide = 1u << 16;
constexpr std::uint64_t kMaxItems = 1u << 26;

class Writer {
 public:
  void u8(std::uint8_t x) { out_.push_back(x); }
  void u32(std::uint32_t x) { for (int k = 0; k < 4; ++k) out_.push_back(static_cast<std::uint8_t>(x >> (8 * k))); }
  void u64(std::uint64_t x) { for (int k = 0; k < 8; ++k) out_.push_back(static_cast<std::uint8_t>(x >> (8 * k))); }
  void i64(std::int64_t x) { u64(static_cast<std::uint64_t>(x)); }
  void point(const Point& p) { out_.insert(out_.end(), p.bytes().begin(), p.bytes().end()); }
  void scalar(const Scalar& s) { out_.insert(out_.end(), s.bytes().begin(), s.bytes().end()); }
  void text(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_.insert(out_.end(), s.begin(), s.end());
  }
  void section(const Writer& body) {
    u64(body.out_.size());
    out_.insert(out_.end(), body.out_.begin(), body.out_.end());
  }
  std::vector<std::uint8_t>& bytes() { return out_; }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  Reader(const std::uint8_t* data, std::size_t size) : p_(data), end_(data + size) {}

  const std::uint8_t* take(std::size_t n) {
    if (static_cast<std::size_t>(end_ - p_) < n) throw Error(ErrorCode::kParse, "proof bundle is truncated");
    const std::uint8_t* at = p_;
    p_ += n;
    return at;
  }
  std::uint8_t u8() { return *take(1); }
  std::uint32_t u32() {
    const auto* b = take(4);
    std::uint32_t x = 0;
    for (int k = 0; k < 4; ++k) x |= static_cast<std::uint32_t>(b[k]) << (8 * k);
    return x;
  }
  std::uint64_t u64() {
    const auto* b = take(8);
    std::uint64_t x = 0;
    for (int k = 0; k < 8; ++k) x |= static_cast<std::uint64_t>(b[k]) << (8 * k);
    return x;
  }
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  Point point() {
    Point::Bytes b;
    std::copy_n(take(32), 32, b.begin());
    return Point::from_bytes(b);
  }
  Scalar scalar() {
    Scalar::Bytes b;
    std::copy_n(take(32), 32, b.begin());
    if (!Scalar::is_canonical(b)) throw Error(ErrorCode::kParse, "non-canonical scalar");
    return Scalar::from_bytes(b);
  }
  std::string text() {
    const std::uint32_t n = u32();
    const auto* b = take(n);
    return {reinterpret_cast<const char*>(b), n};
  }
  std::size_t count(std::uint64_t limit) {
    const std::uint64_t n = u32();
    if (n > limit) throw Error(ErrorCode::kParse, "count field out of range");
    return static_cast<std::size_t>(n);
  }
  Reader section() {
    const std::uint64_t n = u64();
    if (n > static_cast<std::uint64_t>(end_ - p_)) throw Error(ErrorCode::kParse, "section length exceeds input");
    return Reader(take(static_cast<std::size_t>(n)), static_cast<std::size_t>(n));
  }
  void finish() const {
    if (p_ != end_) throw Error(ErrorCode::kParse, "unexpected trailing bytes");
  }

 private:
  const std::uint8_t* p_;
  const std::uint8_t* end_;
};

}  // namespace

std::vector<std::uint8_t> serialize(const ProofBundle& b) {
  Writer out;
  for (char c : kMagic) out.u8(static_cast<std::uint8_t>(c));

  Writer com;
  com.text(b.label);
  com.u32(static_cast<std::uint32_t>(b.commitments.rows));
  com.u32(static_cast<std::uint32_t>(b.commitments.cols));
  for (const auto& p : b.commitments.w) com.point(p);
  for (const auto& p : b.commitments.u) com.point(p);
  for (const auto& p : b.commitments.v) com.point(p);
  out.section(com);

  Writer pub;
  pub.u8(b.statement.sense == Sense::kMaximize ? 1 : 0);
  pub.u32(static_cast<std::uint32_t>(b.proof.width));
  pub.u32(static_cast<std::uint32_t>(b.statement.assignment.size()));
  for (const auto& p : b.statement.assignment) {
    pub.u32(static_cast<std::uint32_t>(p.row));
    pub.u32(static_cast<std::uint32_t>(p.col));
  }
  pub.i64(b.statement.optimum);
  out.section(pub);

  Writer tr;
  tr.u32(static_cast<std::uint32_t>(b.proof.padding.size()));
  for (const auto& p : b.proof.padding) tr.point(p);
  tr.scalar(b.proof.dual_blind);
  tr.scalar(b.proof.weight_blind);
  tr.u32(static_cast<std::uint32_t>(b.proof.tight_blinds.size()));
  for (const auto& s : b.proof.tight_blinds) tr.scalar(s);
  const RangeProof& r = b.proof.range;
  tr.point(r.a_commit);
  tr.point(r.s_commit);
  tr.point(r.t1_commit);
  tr.point(r.t2_commit);
  tr.u32(static_cast<std::uint32_t>(r.l_vec.size()));
  for (std::size_t k = 0; k < r.l_vec.size(); ++k) {
    tr.point(r.l_vec[k]);
    tr.point(r.r_vec[k]);
  }
  for (const auto* s : {&r.tau_x, &r.mu, &r.t_hat, &r.a, &r.b}) tr.scalar(*s);
  out.section(tr);
  return std::move(out.bytes());
}

ProofBundle deserialize(const std::vector<std::uint8_t>& bytes) {
  Reader in(bytes.data(), bytes.size());
  const auto* magic = in.take(sizeof kMagic);
  if (!std::equal(magic, magic + sizeof kMagic, reinterpret_cast<const std::uint8_t*>(kMagic))) {
    throw Error(ErrorCode::kParse, "not a proof bundle (bad magic)");
  }
  ProofBundle b;

  Reader com = in.section();
  b.label = com.text();
  const std::size_t rows = com.count(kMaxSide), cols = com.count(kMaxSide);
  if (rows == 0 || cols == 0) throw Error(ErrorCode::kParse, "empty instance");
  b.commitments.rows = rows;
  b.commitments.cols = cols;
  for (std::size_t k = 0; k < rows * cols; ++k) b.commitments.w.push_back(com.point());
  for (std::size_t k = 0; k < rows; ++k) b.commitments.u.push_back(com.point());
  for (std::size_t k = 0; k < cols; ++k) b.commitments.v.push_back(com.point());
  com.finish();

  Reader pub = in.section();
  const std::uint8_t sense = pub.u8();
  if (sense > 1) throw Error(ErrorCode::kParse, "bad sense flag");
  b.statement.rows = rows;
  b.statement.cols = cols;
  b.statement.sense = sense ? Sense::kMaximize : Sense::kMinimize;
  b.proof.width = static_cast<int>(pub.count(64));
  const std::size_t pairs = pub.count(kMaxSide);
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t i = pub.u32(), j = pub.u32();
    b.statement.assignment.push_back({i, j});
  }
  b.statement.optimum = pub.i64();
  pub.finish();

  Reader tr = in.section();
  const std::size_t pads = tr.count(kMaxItems);
  for (std::size_t k = 0; k < pads; ++k) b.proof.padding.push_back(tr.point());
  b.proof.dual_blind = tr.scalar();
  b.proof.weight_blind = tr.scalar();
  const std::size_t tight = tr.count(kMaxSide);
  for (std::size_t k = 0; k < tight; ++k) b.proof.tight_blinds.push_back(tr.scalar());
  RangeProof& r = b.proof.range;
  r.a_commit = tr.point();
  r.s_commit = tr.point();
  r.t1_commit = tr.point();
  r.t2_commit = tr.point();
  const std::size_t rounds = tr.count(64);
  for (std::size_t k = 0; k < rounds; ++k) {
    r.l_vec.push_back(tr.point());
    r.r_vec.push_back(tr.point());
  }
  for (auto* s : {&r.tau_x, &r.mu, &r.t_hat, &r.a, &r.b}) *s = tr.scalar();
  tr.finish();
  in.finish();
  return b;
}

std::string manifest(const ProofBundle& b) {
  const auto& s = b.statement;
  const std::size_t batch = b.proof.padding.size() + range_count(s.rows, s.cols);
  const ProofSize expect = range_proof_size(batch, b.proof.width);
  const std::size_t groups = b.proof.range.group_elements();
  std::ostringstream out;
  out << "format LSAPZKP1\n"
      << "label " << b.label << "\n"
      << "rows " << s.rows << "\n"
      << "cols " << s.cols << "\n"
      << "sense " << to_string(s.sense) << "\n"
      << "commitments " << b.commitments.size() << "\n"
      << "range_statements " << range_count(s.rows, s.cols) << "\n"
      << "range_batch " << batch << "\n"
      << "width " << b.proof.width << "\n"
      << "group_elements " << groups << "\n"
      << "scalars " << RangeProof::kScalars << "\n"
      << "size_law 2(log2(" << batch << ") + log2(" << b.proof.width << ")) + 4 = "
      << expect.group_elements << (expect.group_elements == groups ? " ok" : " MISMATCH") << "\n"
      << "openings " << 2 + b.proof.tight_blinds.size() << "\n"
      << "bytes " << serialize(b).size() << "\n";
  return out.str();
}

ProofBundle prove_bundle(const OptimalityCertificate& cert, int width, const std::string& label) {
  const WeightMatrix& w = cert.weights;
  const GroupContext ctx = setup(label, required_capacity(w.rows(), w.cols(), width));
  const Blinds blinds = Blinds::random(w.rows(), w.cols());
  ProofBundle b;
  b.label = label;
  b.commitments = commit_instance(ctx, w, cert.dual, blinds);
  b.statement = statement_of(cert);
  b.proof = prove_optimality(ctx, cert, blinds, width);
  return b;
}

ZkVerdict verify_bundle(const ProofBundle& b) {
  const auto& s = b.statement;
  if (b.proof.width < 1 || b.proof.width > 64 || !is_pow2(static_cast<std::size_t>(b.proof.width))) {
    throw Error(ErrorCode::kParse, "bad range width");
  }
  const GroupContext ctx = setup(b.label, required_capacity(s.rows, s.cols, b.proof.width));
  return verify_optimality(ctx, b.commitments, s, b.proof);
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

}  // namespace lsap::zk
