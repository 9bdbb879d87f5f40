#include "revbcd/verify.hpp"

#include <algorithm>
#include <thread>

#include "revbcd/designs.hpp"
#include "revbcd/simulate.hpp"

namespace revbcd {

namespace {

std::vector<BcdDigit> split_digits(std::uint64_t value, unsigned digits) {
  std::vector<BcdDigit> out(digits, BcdDigit(0));
  for (unsigned i = digits; i-- > 0;) {
    out[i] = BcdDigit(static_cast<int>(value % 10));
    value /= 10;
  }
  return out;
}

struct Failure {
  std::uint64_t order;
  std::string text;
};

struct Partial {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<Failure> samples;
};

Partial check_range(const Circuit& circuit, unsigned digits, std::uint64_t a_begin,
                    std::uint64_t a_end, std::uint64_t limit, std::size_t max_samples) {
  Partial part;
  Simulator sim(circuit);
  std::vector<Bit> out(circuit.outputs().size());
  std::vector<Bit> junk(circuit.garbage().size());
  const unsigned bits = 4 * digits;
  for (std::uint64_t a = a_begin; a < a_end; ++a) {
    const auto a_digits = split_digits(a, digits);
    for (std::uint64_t b = 0; b < limit; ++b) {
      const auto b_digits = split_digits(b, digits);
      for (Bit cin : {Bit::zero, Bit::one}) {
        ++part.cases;
        BitWord in = encode_bcd_inputs(a, b, cin, digits);
        sim.run(in.bits(), out, junk);

        BcdNumberSum expected = oracle_bcd_add(a_digits, b_digits, cin);
        bool ok = out[0] == expected.cout;
        for (unsigned bit = 0; bit < bits && ok; ++bit) {
          const unsigned digit = bit / 4;
          const unsigned weight = 3 - bit % 4;
          const bool want = ((expected.digits[digit].value() >> weight) & 1) != 0;
          ok = is_set(out[1 + bit]) == want;
        }
        if (!ok) {
          ++part.failures;
          if (part.samples.size() < max_samples) {
            std::string got;
            for (Bit bitv : out) {
              got.push_back(to_char(bitv));
            }
            std::string want = std::string(1, to_char(expected.cout)) + " ";
            for (const BcdDigit& d : expected.digits) {
              want += BitWord::from_uint(static_cast<std::uint64_t>(d.value()), 4).to_string();
            }
            part.samples.push_back(
                Failure{(a * limit + b) * 2 + (is_set(cin) ? 1 : 0),
                        "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                            " cin=" + std::string(1, to_char(cin)) + ": expected cout,sum " +
                            want + ", circuit gave " + got.substr(0, 1) + " " + got.substr(1)});
          }
        }
      }
    }
  }
  return part;
}

}  // namespace

VerifyReport verify_bcd_adder(const Circuit& circuit, unsigned digits, unsigned workers,
                              std::size_t max_samples) {
  if (digits < 1 || digits > kMaxBcdDigits) {
    throw BadDigitCount("BCD verification supports 1.." + std::to_string(kMaxBcdDigits) +
                        " digits, got " + std::to_string(digits));
  }
  if (circuit.input_count() != 8 * std::size_t{digits} + 1 ||
      circuit.outputs().size() != 4 * std::size_t{digits} + 1) {
    throw WidthMismatch("a " + std::to_string(digits) + "-digit BCD adder needs " +
                        std::to_string(8 * digits + 1) + " inputs and " +
                        std::to_string(4 * digits + 1) + " outputs");
  }
  std::uint64_t limit = 1;
  for (unsigned i = 0; i < digits; ++i) {
    limit *= 10;
  }
  if (workers == 0) {
    workers = std::max(1U, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, limit));

  std::vector<Partial> parts(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = limit * w / workers;
    const std::uint64_t end = limit * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      parts[w] = check_range(circuit, digits, begin, end, limit, max_samples);
    });
  }
  for (std::thread& t : threads) {
    t.join();
  }

  VerifyReport report;
  std::vector<Failure> samples;
  for (Partial& p : parts) {
    report.cases += p.cases;
    report.failures += p.failures;
    samples.insert(samples.end(), p.samples.begin(), p.samples.end());
  }
  std::sort(samples.begin(), samples.end(),
            [](const Failure& x, const Failure& y) { return x.order < y.order; });
  for (std::size_t i = 0; i < samples.size() && i < max_samples; ++i) {
    report.failure_samples.push_back(samples[i].text);
  }
  return report;
}

}  // namespace revbcd
