#include "cncsim/codec.hpp"

#include <stdexcept>
#include <string>

namespace cncsim {

std::vector<Symbol> pack_bits(const std::vector<std::uint8_t>& bytes, unsigned q) {
    std::size_t n_bits = bytes.size() * 8;
    std::size_t n_symbols = (n_bits + q - 1) / q;
    std::vector<Symbol> out(n_symbols, 0);
    for (std::size_t bit = 0; bit < n_bits; ++bit) {
        unsigned b = (bytes[bit / 8] >> (7 - bit % 8)) & 1u;
        if (b) {
            std::size_t sym = bit / q;
            unsigned pos = static_cast<unsigned>(bit % q);
            out[sym] = static_cast<Symbol>(out[sym] | (1u << (q - 1 - pos)));
        }
    }
    return out;
}

std::vector<std::uint8_t> unpack_bits(const std::vector<Symbol>& symbols, unsigned q,
                                      std::size_t n_bytes) {
    std::vector<std::uint8_t> out(n_bytes, 0);
    std::size_t n_bits = n_bytes * 8;
    for (std::size_t bit = 0; bit < n_bits; ++bit) {
        std::size_t sym = bit / q;
        unsigned pos = static_cast<unsigned>(bit % q);
        unsigned b = (symbols[sym] >> (q - 1 - pos)) & 1u;
        if (b) {
            out[bit / 8] = static_cast<std::uint8_t>(out[bit / 8] | (1u << (7 - bit % 8)));
        }
    }
    return out;
}

SourceBlock SourceBlock::random(std::size_t m, std::size_t payload_bits,
                                const GaloisField& field, RandomStream& rng) {
    SourceBlock block;
    block.m = m;
    block.q = field.q();
    block.payload_bits = payload_bits;
    std::size_t n_symbols = block.symbols_per_packet();
    block.padding_bits = static_cast<unsigned>(n_symbols * field.q() - payload_bits);
    block.packets.resize(m);
    for (auto& packet : block.packets) {
        packet.resize(n_symbols);
        for (auto& s : packet) {
            s = rng.symbol(field);
        }
        if (block.padding_bits > 0 && !packet.empty()) {
            // keep the zero fill of the last symbol
            packet.back() = static_cast<Symbol>(packet.back() >> block.padding_bits
                                                << block.padding_bits);
        }
    }
    return block;
}

SourceBlock SourceBlock::from_bytes(const std::vector<std::vector<std::uint8_t>>& packets,
                                    unsigned q) {
    SourceBlock block;
    block.m = packets.size();
    block.q = q;
    block.payload_bits = packets.empty() ? 0 : packets.front().size() * 8;
    for (const auto& p : packets) {
        if (p.size() * 8 != block.payload_bits) {
            throw std::invalid_argument("all packets in a block must have equal length");
        }
        block.packets.push_back(pack_bits(p, q));
    }
    block.padding_bits = static_cast<unsigned>(block.symbols_per_packet() * q - block.payload_bits);
    return block;
}

void add_scaled(std::span<Symbol> dst, std::span<const Symbol> src, Symbol c,
                const GaloisField& field) {
    if (c == 0) {
        return;
    }
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] ^= field.mul(c, src[i]);
    }
}

CodedPacket combine(std::span<const CodedPacket> packets, std::span<const Symbol> coefficients,
                    const GaloisField& field) {
    CodedPacket out;
    out.coding_vector.assign(packets.front().coding_vector.size(), 0);
    out.payload.assign(packets.front().payload.size(), 0);
    for (std::size_t l = 0; l < packets.size(); ++l) {
        add_scaled(out.coding_vector, packets[l].coding_vector, coefficients[l], field);
        add_scaled(out.payload, packets[l].payload, coefficients[l], field);
    }
    return out;
}

std::vector<CodedPacket> rlnc_encode(const SourceBlock& block, std::size_t m_prime,
                                     const GaloisField& field, RandomStream& rng) {
    if (m_prime < block.m) {
        throw std::invalid_argument("m_prime must be at least m");
    }
    std::vector<CodedPacket> out(m_prime);
    for (auto& packet : out) {
        packet.coding_vector.resize(block.m);
        packet.payload.assign(block.symbols_per_packet(), 0);
        for (std::size_t l = 0; l < block.m; ++l) {
            packet.coding_vector[l] = rng.symbol(field);
            add_scaled(packet.payload, block.packets[l], packet.coding_vector[l], field);
        }
    }
    return out;
}

CoefficientMatrix dc_coefficients(std::size_t m, std::size_t m_prime, const GaloisField& field,
                                  DiversityForm form) {
    if (m_prime < m) {
        throw std::invalid_argument("m_prime must be at least m");
    }
    CoefficientMatrix matrix;
    matrix.m = m;
    if (form == DiversityForm::Systematic) {
        if (m_prime > m + field.order()) {
            throw std::invalid_argument(
                "systematic diversity coding supports at most m + 2^q - 1 packets");
        }
        for (std::size_t l = 0; l < m; ++l) {
            std::vector<Symbol> row(m, 0);
            row[l] = 1;
            matrix.add_row(row);
        }
        for (std::size_t j = 1; j + m <= m_prime; ++j) {
            std::vector<Symbol> row(m);
            for (std::size_t l = 1; l <= m; ++l) {
                row[l - 1] = field.pow(field.alpha(), (j - 1) * (l - 1));
            }
            matrix.add_row(row);
        }
    } else {
        if (m_prime > field.order()) {
            throw std::invalid_argument(
                "Vandermonde diversity coding supports at most 2^q - 1 packets");
        }
        for (std::size_t j = 1; j <= m_prime; ++j) {
            std::vector<Symbol> row(m);
            for (std::size_t l = 1; l <= m; ++l) {
                row[l - 1] = field.pow(field.alpha(), (j - 1) * (l - 1));
            }
            matrix.add_row(row);
        }
    }
    return matrix;
}

std::vector<CodedPacket> dc_encode(const SourceBlock& block, std::size_t m_prime,
                                   const GaloisField& field, DiversityForm form) {
    CoefficientMatrix coeffs = dc_coefficients(block.m, m_prime, field, form);
    std::vector<CodedPacket> out(m_prime);
    for (std::size_t j = 0; j < m_prime; ++j) {
        out[j].coding_vector = coeffs.rows[j];
        if (form == DiversityForm::Systematic && j < block.m) {
            out[j].payload = block.packets[j]; // originals travel uncoded
            continue;
        }
        out[j].payload.assign(block.symbols_per_packet(), 0);
        for (std::size_t l = 0; l < block.m; ++l) {
            add_scaled(out[j].payload, block.packets[l], out[j].coding_vector[l], field);
        }
    }
    return out;
}

std::optional<CodedPacket> recode(std::span<const CodedPacket> received, const GaloisField& field,
                                  RandomStream& rng) {
    if (received.empty()) {
        return std::nullopt;
    }
    std::vector<Symbol> coefficients(received.size());
    for (auto& c : coefficients) {
        c = rng.symbol(field);
    }
    return combine(received, coefficients, field);
}

namespace {

// Forward elimination; returns the rank, leaves `rows` in echelon form.
std::size_t eliminate(std::vector<std::vector<Symbol>>& rows, std::size_t m,
                      const GaloisField& field) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m && pivot_row < rows.size(); ++col) {
        // first nonzero entry in column order
        std::size_t found = rows.size();
        for (std::size_t r = pivot_row; r < rows.size(); ++r) {
            if (rows[r][col] != 0) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[pivot_row], rows[found]);
        Symbol inv_pivot = field.inv(rows[pivot_row][col]);
        for (std::size_t c = col; c < rows[pivot_row].size(); ++c) {
            rows[pivot_row][c] = field.mul(rows[pivot_row][c], inv_pivot);
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != pivot_row && rows[r][col] != 0) {
                Symbol factor = rows[r][col];
                for (std::size_t c = col; c < rows[r].size(); ++c) {
                    rows[r][c] ^= field.mul(factor, rows[pivot_row][c]);
                }
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

} // namespace

std::size_t rank(const CoefficientMatrix& matrix, const GaloisField& field) {
    std::vector<std::vector<Symbol>> rows = matrix.rows;
    return eliminate(rows, matrix.m, field);
}

std::size_t rank_of_packets(std::span<const CodedPacket> packets, std::size_t m,
                            const GaloisField& field) {
    CoefficientMatrix matrix;
    matrix.m = m;
    for (const auto& p : packets) {
        matrix.add_row(p.coding_vector);
    }
    return rank(matrix, field);
}

std::size_t innovative_count(const CoefficientMatrix& matrix, const GaloisField& field) {
    return rank(matrix, field);
}

DecodeResult decode(std::span<const CodedPacket> packets, std::size_t m,
                    const GaloisField& field) {
    DecodeResult result;
    if (packets.empty()) {
        return result;
    }
    std::size_t payload_len = packets.front().payload.size();
    // augmented rows [coding vector | payload]
    std::vector<std::vector<Symbol>> rows;
    rows.reserve(packets.size());
    for (const auto& p : packets) {
        std::vector<Symbol> row(m + payload_len);
        std::copy(p.coding_vector.begin(), p.coding_vector.end(), row.begin());
        std::copy(p.payload.begin(), p.payload.end(), row.begin() + static_cast<long>(m));
        rows.push_back(std::move(row));
    }
    result.achieved_rank = eliminate(rows, m, field);
    if (result.achieved_rank < m) {
        return result;
    }
    result.success = true;
    result.payloads.resize(m);
    // after full reduction row i has the identity pivot in column i
    for (std::size_t i = 0; i < m; ++i) {
        result.payloads[i].assign(rows[i].begin() + static_cast<long>(m), rows[i].end());
    }
    return result;
}

bool RankTracker::offer(std::vector<Symbol> v) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Symbol coef = v[pivot_cols_[i]];
        if (coef != 0) {
            add_scaled(v, basis_[i], coef, *field_);
        }
    }
    for (std::size_t col = 0; col < m_; ++col) {
        if (v[col] != 0) {
            Symbol inv_pivot = field_->inv(v[col]);
            for (auto& s : v) {
                s = field_->mul(s, inv_pivot);
            }
            basis_.push_back(std::move(v));
            pivot_cols_.push_back(col);
            return true;
        }
    }
    return false;
}

} // namespace cncsim
