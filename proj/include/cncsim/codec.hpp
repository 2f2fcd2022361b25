#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cncsim/field.hpp"
#include "cncsim/packet.hpp"
#include "cncsim/rng.hpp"

namespace cncsim {

// Diversity-coding layout. Systematic sends the m originals uncoded and adds
// m'-m Vandermonde protection rows, which is the form whose coding cost is
// (m'-m) packets; the full Vandermonde form codes all m' packets and is kept
// for comparison.
enum class DiversityForm {
    Systematic,
    Vandermonde,
};

// dst += c * src, symbol-wise.
void add_scaled(std::span<Symbol> dst, std::span<const Symbol> src, Symbol c,
                const GaloisField& field);

// Net combination of packets with the given coefficients: both the coding
// vector and the payload are combined, so the output's header stays the true
// map from originals to payload across any number of recoding hops.
CodedPacket combine(std::span<const CodedPacket> packets, std::span<const Symbol> coefficients,
                    const GaloisField& field);

// m_prime random combination packets, coefficients uniform over GF(2^q).
// Zero coefficients (and even all-zero rows) are allowed; excluding them
// would bias the innovation statistics.
std::vector<CodedPacket> rlnc_encode(const SourceBlock& block, std::size_t m_prime,
                                     const GaloisField& field, RandomStream& rng);

// Deterministic diversity-coding coefficients. Systematic: m identity rows,
// then protection rows beta_jl = alpha^((j-1)(l-1)); protection row count is
// capped at 2^q - 1 before evaluation points repeat. Vandermonde: all
// m_prime rows are Vandermonde, capped at m_prime <= 2^q - 1.
CoefficientMatrix dc_coefficients(std::size_t m, std::size_t m_prime, const GaloisField& field,
                                  DiversityForm form = DiversityForm::Systematic);

std::vector<CodedPacket> dc_encode(const SourceBlock& block, std::size_t m_prime,
                                   const GaloisField& field,
                                   DiversityForm form = DiversityForm::Systematic);

// Relay recoding: a fresh uniform coefficient per received packet. Empty
// input means the node has nothing to send this round.
std::optional<CodedPacket> recode(std::span<const CodedPacket> received, const GaloisField& field,
                                  RandomStream& rng);

// Row rank by Gaussian elimination over GF(2^q).
std::size_t rank(const CoefficientMatrix& matrix, const GaloisField& field);

std::size_t rank_of_packets(std::span<const CodedPacket> packets, std::size_t m,
                            const GaloisField& field);

// Recoverable information packets = rank of the received coding vectors.
std::size_t innovative_count(const CoefficientMatrix& matrix, const GaloisField& field);

struct DecodeResult {
    bool success = false;
    std::size_t achieved_rank = 0;
    std::vector<std::vector<Symbol>> payloads; // m originals when success
};

// Solves coding_matrix * x = payloads by Gaussian elimination with the first
// nonzero pivot in column order. Fails (carrying the achieved rank) when
// fewer than m innovative packets were supplied.
DecodeResult decode(std::span<const CodedPacket> packets, std::size_t m,
                    const GaloisField& field);

// Incremental rank tracker: keeps a reduced basis, reports whether each new
// vector is innovative. Used by the destination and by draw-until-full-rank
// experiments.
class RankTracker {
public:
    RankTracker(std::size_t m, const GaloisField& field) : m_(m), field_(&field) {}

    // True if v was linearly independent of everything seen so far.
    bool offer(std::vector<Symbol> v);

    std::size_t rank() const { return basis_.size(); }
    bool full() const { return basis_.size() == m_; }

private:
    std::size_t m_;
    const GaloisField* field_;
    std::vector<std::vector<Symbol>> basis_; // rows with staircase pivots
    std::vector<std::size_t> pivot_cols_;
};

} // namespace cncsim
