#include "parkfn/checkpoint.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "parkfn/serialize.hpp"

namespace fs = std::filesystem;

namespace parkfn {

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Write-then-rename so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content) {
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InternalError("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

}  // namespace

std::string manifest_path(const std::string& dir) {
  return (fs::path(dir) / "manifest.json").string();
}

std::string block_path(const std::string& dir, uint64_t start_rank,
                       uint64_t end_rank) {
  return (fs::path(dir) / ("block_" + std::to_string(start_rank) + "_" +
                           std::to_string(end_rank) + ".json"))
      .string();
}

std::optional<CheckpointManifest> load_manifest(const std::string& dir, int n) {
  auto text = read_file(manifest_path(dir));
  if (!text) return std::nullopt;
  try {
    ojson j = parse_json_text(*text);
    CheckpointManifest m;
    m.n = j.at("n").get<int>();
    m.format_version = j.at("format_version").get<int>();
    if (m.n != n || m.format_version != kCheckpointFormatVersion) {
      std::cerr << "checkpoint manifest does not match (n or version); ignoring\n";
      return std::nullopt;
    }
    for (const auto& b : j.at("completed_blocks")) {
      CompletedBlock cb;
      cb.start_rank = b.at("start_rank").get<uint64_t>();
      cb.end_rank = b.at("end_rank").get<uint64_t>();
      cb.digest = std::stoull(b.at("digest").get<std::string>());
      m.completed_blocks.push_back(cb);
    }
    return m;
  } catch (const std::exception& e) {
    std::cerr << "unreadable checkpoint manifest (" << e.what()
              << "); ignoring\n";
    return std::nullopt;
  }
}

void save_manifest(const std::string& dir, const CheckpointManifest& m) {
  ojson j;
  j["n"] = m.n;
  j["format_version"] = m.format_version;
  ojson blocks = ojson::array();
  for (const auto& b : m.completed_blocks) {
    ojson jb;
    jb["start_rank"] = b.start_rank;
    jb["end_rank"] = b.end_rank;
    jb["digest"] = std::to_string(b.digest);
    blocks.push_back(std::move(jb));
  }
  j["completed_blocks"] = std::move(blocks);
  write_file_atomic(manifest_path(dir), canonical_dump(j));
}

void save_block(const std::string& dir, uint64_t start_rank, uint64_t end_rank,
                const BivariatePolynomial& poly) {
  write_file_atomic(block_path(dir, start_rank, end_rank),
                    canonical_dump(to_json(poly)));
}

std::optional<BivariatePolynomial> load_block(const std::string& dir,
                                              const CompletedBlock& block) {
  std::string path = block_path(dir, block.start_rank, block.end_rank);
  auto text = read_file(path);
  if (!text) {
    std::cerr << "checkpoint block " << path << " missing; recomputing\n";
    return std::nullopt;
  }
  try {
    if (fnv1a64(*text) != block.digest) {
      std::cerr << "checkpoint block " << path
                << " digest mismatch; recomputing\n";
      return std::nullopt;
    }
    return polynomial_from_json(parse_json_text(*text));
  } catch (const std::exception& e) {
    std::cerr << "unreadable checkpoint block " << path << " (" << e.what()
              << "); recomputing\n";
    return std::nullopt;
  }
}

uint64_t polynomial_digest(const BivariatePolynomial& poly) {
  return fnv1a64(canonical_dump(to_json(poly)));
}

}  // namespace parkfn
