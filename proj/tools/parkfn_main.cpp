#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "parkfn/bs_codec.hpp"
#include "parkfn/checkpoint.hpp"
#include "parkfn/enumeration.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/hl_codec.hpp"
#include "parkfn/serialize.hpp"
#include "parkfn/stats.hpp"

namespace {

using parkfn::ojson;

std::string read_stdin() {
  return std::string(std::istreambuf_iterator<char>(std::cin),
                     std::istreambuf_iterator<char>());
}

struct EvalPoint {
  long long q;
  long long t;
};

// --eval takes exactly "q=<int>,t=<int>".
EvalPoint parse_eval(const std::string& text) {
  auto fail = [&]() -> EvalPoint {
    throw parkfn::ParseError("--eval expects q=<int>,t=<int>, got \"" + text +
                             "\"");
  };
  size_t comma = text.find(',');
  if (comma == std::string::npos) return fail();
  std::string qs = text.substr(0, comma);
  std::string ts = text.substr(comma + 1);
  if (qs.rfind("q=", 0) != 0 || ts.rfind("t=", 0) != 0) return fail();
  EvalPoint p{};
  try {
    size_t used = 0;
    p.q = std::stoll(qs.substr(2), &used);
    if (used != qs.size() - 2) return fail();
    p.t = std::stoll(ts.substr(2), &used);
    if (used != ts.size() - 2) return fail();
  } catch (const std::exception&) {
    return fail();
  }
  return p;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

std::filesystem::path cache_file_path(const std::string& dir, int n) {
  return std::filesystem::path(dir) /
         ("rpoly_n" + std::to_string(n) + "_v1.json");
}

std::optional<parkfn::BivariatePolynomial> load_cached_polynomial(
    const std::string& dir, int n) {
  std::filesystem::path path = cache_file_path(dir, n);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  try {
    ojson j = parkfn::parse_json_text(text);
    if (j.at("n").get<int>() != n ||
        j.at("format_version").get<int>() != parkfn::kCheckpointFormatVersion)
      throw parkfn::ParseError("cache metadata mismatch");
    parkfn::BivariatePolynomial poly =
        parkfn::polynomial_from_json(j.at("polynomial"));
    uint64_t digest = std::stoull(j.at("digest").get<std::string>());
    if (digest != parkfn::polynomial_digest(poly))
      throw parkfn::ParseError("cache digest mismatch");
    return poly;
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring cache file " << path.string() << ": "
              << e.what() << "; recomputing" << std::endl;
    return std::nullopt;
  }
}

void store_cached_polynomial(const std::string& dir, int n,
                             const parkfn::BivariatePolynomial& poly) {
  ojson j;
  j["n"] = n;
  j["format_version"] = parkfn::kCheckpointFormatVersion;
  j["digest"] = std::to_string(parkfn::polynomial_digest(poly));
  j["polynomial"] = parkfn::to_json(poly);
  write_text_file(cache_file_path(dir, n), parkfn::canonical_dump(j) + "\n");
}

int run_encode(const std::string& codec) {
  ojson j = parkfn::parse_json_text(read_stdin());
  parkfn::ParkingFunction q =
      codec == "hl" ? parkfn::hl_encode(parkfn::hl_pair_from_json(j))
                    : parkfn::bs_encode(parkfn::admissible_pair_from_json(j));
  std::cout << parkfn::canonical_dump(parkfn::to_json(q)) << "\n";
  return 0;
}

int run_decode(const std::string& codec) {
  ojson j = parkfn::parse_json_text(read_stdin());
  parkfn::ParkingFunction q = parkfn::parking_function_from_json(j);
  ojson out = codec == "hl" ? parkfn::to_json(parkfn::hl_decode(q))
                            : parkfn::to_json(parkfn::bs_decode(q));
  std::cout << parkfn::canonical_dump(out) << "\n";
  return 0;
}

int run_stats() {
  ojson j = parkfn::parse_json_text(read_stdin());
  parkfn::Permutation sigma = parkfn::permutation_from_json(j);
  ojson out;
  out["descents"] = parkfn::descent_set(sigma);
  out["maj"] = parkfn::maj(sigma);
  out["u"] = parkfn::u_vector(sigma);
  out["shape"] = parkfn::to_json(parkfn::classify_shape(sigma));
  std::cout << parkfn::canonical_dump(out) << "\n";
  return 0;
}

int run_rpoly(int n, int workers, const std::string& cache_dir,
              const std::string& format, const std::string& eval_text) {
  std::string dir = cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("PARKFN_CACHE_DIR")) dir = env;
  }
  std::optional<parkfn::BivariatePolynomial> poly;
  if (!dir.empty()) poly = load_cached_polynomial(dir, n);
  if (!poly) {
    poly = parkfn::compute_r_polynomial(n, workers);
    if (!dir.empty()) store_cached_polynomial(dir, n, *poly);
  }
  if (!eval_text.empty()) {
    EvalPoint at = parse_eval(eval_text);
    std::cout << poly->evaluate(at.q, at.t) << "\n";
    return 0;
  }
  if (format == "text")
    std::cout << parkfn::polynomial_to_text(*poly) << "\n";
  else if (format == "csv")
    std::cout << parkfn::polynomial_to_csv(*poly);
  else
    std::cout << parkfn::canonical_dump(parkfn::to_json(*poly)) << "\n";
  return 0;
}

int run_verify(int n) {
  parkfn::VerificationReport rep = parkfn::verify_bijections(n);
  for (const std::string& line : rep.lines) std::cout << line << "\n";
  std::cout << parkfn::canonical_dump(rep.to_json()) << "\n";
  return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parking-function codecs, statistics, and polynomials"};
  app.require_subcommand(1);

  std::string codec = "hl";
  int n = 0;
  int workers = 1;
  std::string format = "json";
  std::string cache_dir;
  std::string eval_text;

  CLI::App* enc = app.add_subcommand(
      "encode", "Read a pair as JSON on stdin, print its parking function");
  enc->add_option("--codec", codec, "Pair kind: hl or bs")
      ->check(CLI::IsMember({"hl", "bs"}));

  CLI::App* dec = app.add_subcommand(
      "decode", "Read a parking function on stdin, print its pair");
  dec->add_option("--codec", codec, "Pair kind: hl or bs")
      ->check(CLI::IsMember({"hl", "bs"}));

  app.add_subcommand("stats",
                     "Read a permutation on stdin, print its statistics");

  CLI::App* rpoly = app.add_subcommand("rpoly", "Print the polynomial R_n");
  rpoly->add_option("--n", n, "Size parameter")->required();
  rpoly->add_option("--workers", workers, "Partition count");
  rpoly->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  rpoly->add_option("--cache-dir", cache_dir,
                    "Cache directory (default: $PARKFN_CACHE_DIR)");
  rpoly->add_option("--eval", eval_text, "Evaluate at q=<int>,t=<int>");

  CLI::App* verify =
      app.add_subcommand("verify", "Cross-check the codecs exhaustively");
  verify->add_option("--n", n, "Size parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enc->parsed()) return run_encode(codec);
    if (dec->parsed()) return run_decode(codec);
    if (rpoly->parsed())
      return run_rpoly(n, workers, cache_dir, format, eval_text);
    if (verify->parsed()) return run_verify(n);
    return run_stats();
  } catch (const parkfn::ParseError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const parkfn::InvalidInputError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 3;
  } catch (const parkfn::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 3;
  } catch (const parkfn::NoCorrespondenceError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return 4;
  }
}
