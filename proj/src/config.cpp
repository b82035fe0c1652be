#include "noncross/config.hpp"

#include <charconv>
#include <numeric>

#include "noncross/error.hpp"

namespace noncross {

namespace {

int lcm_of(const std::vector<int>& blocks) {
  std::int64_t l = 1;
  for (int b : blocks) {
    l = std::lcm(l, static_cast<std::int64_t>(b));
    if (l > (1 << 20)) {
      throw Error(ErrorCode::kConfig, "lcm of blocks too large");
    }
  }
  return static_cast<int>(l);
}

}  // namespace

AlgebraConfig::AlgebraConfig(std::vector<int> blocks)
    : AlgebraConfig(blocks, lcm_of(blocks)) {}

AlgebraConfig::AlgebraConfig(std::vector<int> blocks, int root_order)
    : blocks_(std::move(blocks)), m_(root_order) {
  if (blocks_.empty()) {
    throw Error(ErrorCode::kConfig, "at least one block is required");
  }
  for (int b : blocks_) {
    if (b < 2) {
      throw Error(ErrorCode::kConfig,
                  "every block n_i must be >= 2, got " + std::to_string(b));
    }
    n_ *= b;
  }
  if (m_ < 1 || m_ % lcm_of(blocks_) != 0) {
    throw Error(ErrorCode::kConfig,
                "root order m must be a positive multiple of lcm(blocks)");
  }
}

int AlgebraConfig::block(int i) const {
  if (i < 1 || i > r()) {
    throw Error(ErrorCode::kConfig, "block index " + std::to_string(i) +
                                        " outside 1.." + std::to_string(r()));
  }
  return blocks_[static_cast<std::size_t>(i - 1)];
}

std::string AlgebraConfig::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(blocks_[i]);
  }
  out += ")";
  if (m_ != lcm_of(blocks_)) out += " over m=" + std::to_string(m_);
  return out;
}

AlgebraConfig parse_blocks(const std::string& text) {
  std::vector<int> blocks;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw Error(ErrorCode::kConfig, "malformed --blocks value '" + text + "'");
    }
    blocks.push_back(value);
    pos = comma + 1;
  }
  return AlgebraConfig(std::move(blocks));
}

}  // namespace noncross
