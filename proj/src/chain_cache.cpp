#include "branchdim/chain_cache.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace branchdim {

namespace {

constexpr std::string_view kMagic = "BDIM1";
constexpr std::string_view kSuffix = ".bdim";

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFU));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFU));
}

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  bool u32(std::uint32_t& v) {
    if (data_.size() - pos_ < 4) return false;
    v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    pos_ += 4;
    return true;
  }
  bool u64(std::uint64_t& v) {
    if (data_.size() - pos_ < 8) return false;
    v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    pos_ += 8;
    return true;
  }
  bool bytes(std::size_t n, std::string& out) {
    if (data_.size() - pos_ < n) return false;
    out.assign(data_.substr(pos_, n));
    pos_ += n;
    return true;
  }
  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ == data_.size(); }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint64_t ChainCache::key(const GroupDef& def, std::size_t level) {
  return fnv1a("\nlevel " + std::to_string(level), fnv1a(def.canonical_text()));
}

std::filesystem::path ChainCache::file_for(std::uint64_t key) const {
  std::ostringstream name;
  name << "chain-" << std::hex << std::setw(16) << std::setfill('0') << key << kSuffix;
  return dir_ / name.str();
}

std::optional<StabChain> ChainCache::load(std::uint64_t key) const {
  std::ifstream in(file_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string data = buffer.str();
  if (data.size() < kMagic.size() + 8 || data.compare(0, kMagic.size(), kMagic) != 0) return std::nullopt;

  const std::string_view payload(data.data(), data.size() - 8);
  Reader tail(std::string_view(data).substr(data.size() - 8));
  std::uint64_t checksum = 0;
  if (!tail.u64(checksum) || checksum != fnv1a(payload)) return std::nullopt;

  Reader r(payload.substr(kMagic.size()));
  std::uint64_t stored_key = 0;
  std::uint32_t degree = 0, base_len = 0, gen_count = 0, order_len = 0;
  if (!r.u64(stored_key) || stored_key != key || !r.u32(degree) || !r.u32(base_len)) return std::nullopt;
  if (degree == 0 || base_len > degree) return std::nullopt;
  std::vector<Point> base(base_len);
  for (auto& p : base)
    if (!r.u32(p) || p >= degree) return std::nullopt;
  if (!r.u32(gen_count)) return std::nullopt;
  std::vector<Perm> gens;
  try {
    for (std::uint32_t i = 0; i < gen_count; ++i) {
      std::vector<Point> images(degree);
      for (auto& x : images)
        if (!r.u32(x)) return std::nullopt;
      gens.emplace_back(std::move(images));
    }
    std::string order_bytes;
    if (!r.u32(order_len) || !r.bytes(order_len, order_bytes) || !r.done()) return std::nullopt;
    StabChain chain = StabChain::from_bsgs(degree, std::move(base), std::move(gens));
    if (chain.order() != from_bytes(order_bytes)) return std::nullopt;
    return chain;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ChainCache::store(std::uint64_t key, const StabChain& chain) const {
  std::string out(kMagic);
  put_u64(out, key);
  put_u32(out, static_cast<std::uint32_t>(chain.degree()));
  const auto base = chain.base();
  put_u32(out, static_cast<std::uint32_t>(base.size()));
  for (Point p : base) put_u32(out, p);
  put_u32(out, static_cast<std::uint32_t>(chain.strong_generators().size()));
  for (const auto& g : chain.strong_generators())
    for (Point x : g.images()) put_u32(out, x);
  const std::string order = to_bytes(chain.order());
  put_u32(out, static_cast<std::uint32_t>(order.size()));
  out += order;
  put_u64(out, fnv1a(out));

  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto target = file_for(key);
  auto temp = target;
  temp += ".tmp";
  {
    std::ofstream f(temp, std::ios::binary | std::ios::trunc);
    if (!f) return;
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!f) return;
  }
  std::filesystem::rename(temp, target, ec);
  if (ec) std::filesystem::remove(temp, ec);
}

ChainCache::Info ChainCache::info() const {
  Info info;
  std::error_code ec;
  if (!std::filesystem::is_directory(dir_, ec)) return info;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != kSuffix) continue;
    ++info.files;
    info.bytes += entry.file_size(ec);
  }
  return info;
}

std::size_t ChainCache::clear() const {
  std::size_t removed = 0;
  std::error_code ec;
  if (!std::filesystem::is_directory(dir_, ec)) return 0;
  std::vector<std::filesystem::path> victims;
  for (const auto& entry : std::filesystem::directory_iterator(dir_, ec))
    if (entry.is_regular_file() && entry.path().extension() == kSuffix) victims.push_back(entry.path());
  for (const auto& p : victims)
    if (std::filesystem::remove(p, ec)) ++removed;
  return removed;
}

}  // namespace branchdim
