// adm: fixed-to-variable distribution matcher front end.
//
// Subcommands: encode, decode, sweep, enumerate, optimal, mc.
// Source-bit files are ASCII '0'/'1' text (whitespace ignored); codeword
// files are binary streams of self-describing ADM1 frames.
// Exit codes: 0 ok, 2 usage, 3 malformed input, 4 truncated codeword,
// 5 internal invariant violation.

#include <CLI11.hpp>

#include <adm/adm.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace adm;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::uint8_t> read_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FrameError("cannot open input file: " + path);
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  return bytes;
}

BitSequence read_bit_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FrameError("cannot open input file: " + path);
  BitSequence bits;
  char ch;
  while (in.get(ch)) {
    if (ch == '0' || ch == '1') bits.push_back(ch - '0');
    else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw FrameError("source file may contain only '0', '1', and whitespace");
    }
  }
  return bits;
}

// --out defaults to standard output.
struct Sink {
  std::ofstream file;
  std::ostream* out = &std::cout;

  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file.open(path, std::ios::binary);
    if (!file) throw FrameError("cannot open output file: " + path);
    out = &file;
  }
  std::ostream& stream() { return *out; }
};

struct CommonFlags {
  std::string p_src = "0.5";
  std::string p_code = "0.5";
  std::uint64_t n = 0;
  std::string backend = "exact";
  std::string out;

  void attach(CLI::App& cmd, bool with_n = true) {
    cmd.add_option("--p-src", p_src, "source bit probability of 0 (exact decimal)");
    cmd.add_option("--p-code", p_code, "target bit probability of 0 (exact decimal)");
    if (with_n) cmd.add_option("--n", n, "source block length");
    cmd.add_option("--backend", backend, "arithmetic backend")
        ->check(CLI::IsMember({"exact", "fixed"}));
    cmd.add_option("--out", out, "output path (default: stdout)");
  }

  MatcherConfig config() const {
    BackendId b = backend == "fixed" ? BackendId::fixed() : BackendId::exact();
    return MatcherConfig{Prob::from_decimal(p_src), Prob::from_decimal(p_code), n, b};
  }
};

int cmd_encode(const CommonFlags& flags, const std::string& in_path) {
  MatcherConfig cfg = flags.config();
  BitSequence bits = read_bit_text(in_path);
  if (cfg.n == 0) {
    if (!bits.empty()) throw DomainError("--n 0 requires an empty input");
  } else if (bits.size() % cfg.n != 0) {
    throw DomainError("input bit count is not a multiple of --n");
  }

  Sink sink(flags.out);
  std::size_t blocks = cfg.n == 0 ? 1 : bits.size() / cfg.n;
  for (std::size_t i = 0; i < blocks; ++i) {
    BitSequence block;
    for (std::uint64_t j = 0; j < cfg.n; ++j) block.push_back(bits[i * cfg.n + j]);
    BitSequence code = encode(block, cfg);
    auto frame = frame_codeword(code, cfg);
    sink.stream().write(reinterpret_cast<const char*>(frame.data()),
                        static_cast<std::streamsize>(frame.size()));
    std::cerr << "block " << i << ": n=" << cfg.n << " l=" << code.size() << " ("
              << frame.size() << " bytes framed)\n";
  }
  return 0;
}

int cmd_decode(const std::string& out_path, const std::string& in_path) {
  auto bytes = read_binary(in_path);
  Sink sink(out_path);
  std::size_t offset = 0, index = 0;
  while (offset < bytes.size()) {
    auto block = decode_block_framed(bytes, offset);
    sink.stream() << block.source.to_string();
    std::cerr << "block " << index++ << ": l=" << block.codeword.size()
              << " -> n=" << block.source.size() << '\n';
    offset += block.bytes_consumed;
  }
  sink.stream() << '\n';
  return 0;
}

int cmd_enumerate(const CommonFlags& flags) {
  Codebook cb = enumerate_codebook(flags.config());
  Sink sink(flags.out);
  sink.stream() << "source,code,p_y,p_z_c\n";
  for (const auto& e : cb.entries) {
    sink.stream() << e.source.to_string() << ',' << e.code.to_string() << ','
                  << fmt(static_cast<double>(BigFloat(e.p_y))) << ','
                  << fmt(static_cast<double>(BigFloat(e.p_z_c))) << '\n';
  }
  auto r = exact_report(cb);
  std::cerr << "kl_bits=" << fmt(r.kl_bits)
            << " expected_length=" << fmt(r.expected_length)
            << " coverage=" << fmt(static_cast<double>(BigFloat(codebook_coverage(cb))))
            << '\n';
  return 0;
}

int cmd_optimal(const CommonFlags& flags) {
  auto r = optimal_codebook_bruteforce(static_cast<unsigned>(flags.n),
                                       Prob::from_decimal(flags.p_src),
                                       Prob::from_decimal(flags.p_code));
  Sink sink(flags.out);
  sink.stream() << "source,code\n";
  for (const auto& [s, c] : r.assignment) {
    sink.stream() << s.to_string() << ',' << c.to_string() << '\n';
  }
  std::cerr << "kl_bits=" << fmt(r.kl_bits) << '\n';
  return 0;
}

void write_row(std::ostream& os, std::uint64_t n, const char* mode,
               const MatchReport& r, double h_target) {
  os << n << ',' << mode << ',' << fmt(r.kl_bits) << ',' << fmt(r.normalized_kl) << ','
     << fmt(r.expected_length) << ',' << fmt(r.rate) << ',' << fmt(r.stderr_kl) << ','
     << fmt(r.kl_upper) << ',' << fmt(h_target) << '\n';
}

int cmd_mc(const CommonFlags& flags, std::uint64_t trials, std::uint64_t seed) {
  MatcherConfig cfg = flags.config();
  auto r = monte_carlo_report(cfg, trials, seed);
  Sink sink(flags.out);
  sink.stream() << "n,mode,kl_bits,kl_normalized,expected_length,rate,stderr,"
                   "kl_upper_bound,entropy_target\n";
  write_row(sink.stream(), cfg.n, "mc", r, entropy(cfg.p_code));
  return 0;
}

int cmd_sweep(const CommonFlags& flags, const std::vector<std::uint64_t>& exact_ns,
              const std::vector<std::uint64_t>& mc_ns, std::uint64_t trials,
              std::uint64_t seed) {
  if (trials < 1) throw DomainError("--trials must be at least 1");
  MatcherConfig base = flags.config();
  double h_target = entropy(base.p_code);
  Sink sink(flags.out);
  sink.stream() << "n,mode,kl_bits,kl_normalized,expected_length,rate,stderr,"
                   "kl_upper_bound,entropy_target\n";

  for (std::uint64_t n : exact_ns) {
    MatcherConfig cfg = base;
    cfg.n = n;
    cfg.backend = BackendId::exact();
    write_row(sink.stream(), n, "exact", exact_report(enumerate_codebook(cfg)),
              h_target);
  }
  for (std::uint64_t n : exact_ns) {
    if (n > 4) continue;
    auto o = optimal_codebook_bruteforce(static_cast<unsigned>(n), base.p_src,
                                         base.p_code);
    MatchReport r;
    r.kl_bits = o.kl_bits;
    r.kl_upper = kl_upper_bound(base.p_code);
    write_row(sink.stream(), n, "optimal-oracle", r, h_target);
  }
  for (std::uint64_t n : mc_ns) {
    MatcherConfig cfg = base;
    cfg.n = n;
    write_row(sink.stream(), n, "mc", monte_carlo_report(cfg, trials, seed), h_target);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed-to-variable distribution matcher"};
  app.require_subcommand(1);

  CommonFlags enc_flags, dec_flags, enum_flags, opt_flags, mc_flags, sweep_flags;
  std::string enc_in, dec_in;
  std::uint64_t trials = 1000, seed = 1;
  std::uint64_t sweep_trials = 1000, sweep_seed = 1;
  std::vector<std::uint64_t> exact_ns, mc_ns;

  auto* enc = app.add_subcommand("encode", "encode a source-bit text file into frames");
  enc->add_option("input", enc_in, "source bits as ASCII '0'/'1'")->required();
  enc_flags.attach(*enc);

  auto* dec = app.add_subcommand("decode", "decode a framed file back to source bits");
  dec->add_option("input", dec_in, "framed codeword file")->required();
  dec->add_option("--out", dec_flags.out, "output path (default: stdout)");

  auto* enu = app.add_subcommand("enumerate", "list the codebook for one block length");
  enum_flags.attach(*enu);

  auto* opt = app.add_subcommand("optimal", "brute-force minimum-divergence code");
  opt_flags.attach(*opt);

  auto* mc = app.add_subcommand("mc", "Monte Carlo divergence/rate estimate");
  mc_flags.attach(*mc);
  mc->add_option("--trials", trials, "number of sampled blocks");
  mc->add_option("--seed", seed, "master RNG seed");

  auto* sweep = app.add_subcommand("sweep", "CSV sweep over block lengths");
  sweep_flags.attach(*sweep, /*with_n=*/false);
  sweep->add_option("--exact-ns", exact_ns, "block lengths for exact enumeration");
  sweep->add_option("--mc-ns", mc_ns, "block lengths for Monte Carlo");
  sweep->add_option("--trials", sweep_trials, "Monte Carlo trials per length");
  sweep->add_option("--seed", sweep_seed, "master RNG seed");

  try {
    app.parse(argc, argv);
    if (enc->parsed()) return cmd_encode(enc_flags, enc_in);
    if (dec->parsed()) return cmd_decode(dec_flags.out, dec_in);
    if (enu->parsed()) return cmd_enumerate(enum_flags);
    if (opt->parsed()) return cmd_optimal(opt_flags);
    if (mc->parsed()) return cmd_mc(mc_flags, trials, seed);
    if (sweep->parsed()) {
      return cmd_sweep(sweep_flags, exact_ns, mc_ns, sweep_trials, sweep_seed);
    }
    return 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const adm::TruncatedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const adm::FrameError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const adm::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 5;
  }
}
