#pragma once

#include "caps.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mmnrel
{

/// Row-major binary matrix; rows()*cols() entries, each 0 or 1.
class BinaryMatrix
{
public:
  BinaryMatrix() = default;
  BinaryMatrix( std::size_t rows, std::size_t cols, std::uint8_t fill = 0 );

  /// Throws std::invalid_argument on ragged rows or entries other than 0/1.
  static BinaryMatrix from_rows( std::vector<std::vector<int>> const& rows );

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  /// 1-based access, matching the matchstick (i,j) convention.
  std::uint8_t at( std::size_t i, std::size_t j ) const { return bits_[( i - 1 ) * cols_ + ( j - 1 )]; }
  void set( std::size_t i, std::size_t j, std::uint8_t v ) { bits_[( i - 1 ) * cols_ + ( j - 1 )] = v; }

  std::vector<std::uint8_t> const& raw() const noexcept { return bits_; }
  std::vector<std::vector<int>> to_rows() const;

  BinaryMatrix complement() const;
  BinaryMatrix transpose() const;

  bool operator==( BinaryMatrix const& ) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Matchstick minimal network of width w (minimal cut) and length l (minimal
/// path). The matchstick matrix exists iff w >= 2 and l >= 2.
class Mmn
{
public:
  Mmn() : Mmn( 1, 1 ) {}

  /// Degenerate constructor (w == 1 or l == 1); any other dimensions get the
  /// all-zeros matrix.
  Mmn( std::size_t width, std::size_t length );
  Mmn( std::size_t width, std::size_t length, BinaryMatrix matchsticks );

  std::size_t width() const noexcept { return width_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return width_ * length_; }

  bool has_matrix() const noexcept { return width_ >= 2 && length_ >= 2; }
  bool is_all_series() const noexcept { return width_ == 1; }
  bool is_all_parallel() const noexcept { return length_ == 1; }

  /// Empty (0x0) for degenerate networks.
  BinaryMatrix const& matchsticks() const noexcept { return matchsticks_; }
  bool matchstick( std::size_t i, std::size_t j ) const { return matchsticks_.at( i, j ) != 0; }

  /// Structural equality on (w, l, matrix); equal reliability does not imply equality.
  bool operator==( Mmn const& ) const = default;

private:
  std::size_t width_;
  std::size_t length_;
  BinaryMatrix matchsticks_;
};

/// Binary word u = (u_1..u_m) driving the composition C^u. Bit i-1 of the
/// mask holds u_i.
class CompositionWord
{
public:
  static constexpr std::size_t max_length = 63;

  CompositionWord() = default;
  CompositionWord( std::size_t m, std::uint64_t mask );

  /// '0'/'1' characters, index 1 first. Throws std::invalid_argument.
  static CompositionWord parse( std::string_view text );
  static CompositionWord from_support( std::size_t m, std::vector<std::size_t> const& support );

  std::size_t length() const noexcept { return m_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool bit( std::size_t i ) const { return ( mask_ >> ( i - 1 ) ) & 1u; }

  /// Sorted ascending, 1-based.
  std::vector<std::size_t> support() const;
  std::size_t weight() const noexcept;
  std::uint64_t width() const noexcept { return std::uint64_t{ 1 } << weight(); }
  std::uint64_t network_length() const noexcept { return std::uint64_t{ 1 } << ( m_ - weight() ); }
  std::size_t rank() const noexcept;

  CompositionWord complement() const noexcept;
  std::string to_string() const;

  bool operator==( CompositionWord const& ) const = default;

private:
  std::size_t m_ = 0;
  std::uint64_t mask_ = 0;
};

struct DeviceEdge
{
  std::size_t a;
  std::size_t b;
  std::size_t device; // 1..n
};

struct GraphRealization
{
  std::size_t node_count = 0;
  std::size_t source = 0;
  std::size_t terminus = 0;
  std::vector<DeviceEdge> edges;

  /// adjacency()[v] lists indices into edges.
  std::vector<std::vector<std::size_t>> adjacency() const;
  /// True iff S and T are joined using only the devices whose bit (device-1) is set.
  bool connects( std::uint64_t working ) const;
};

Mmn mmn_from_matrix( std::size_t w, std::size_t l, std::optional<BinaryMatrix> const& matchsticks );

Mmn pos( std::size_t w, std::size_t l );
Mmn sop( std::size_t w, std::size_t l );

enum class HammockVariant
{
  h,
  h_plus
};

Mmn hammock( std::size_t w, std::size_t l, HammockVariant variant = HammockVariant::h );

/// Replace every device of outer by a copy of inner.
Mmn compose( Mmn const& outer, Mmn const& inner );

/// C^(u_1) . ... . C^(u_m), u_1 outermost; the empty word is a single device.
Mmn mmn_from_word( CompositionWord const& u );

Mmn dual( Mmn const& n );
CompositionWord dual_word( CompositionWord const& u );

mpz_class count_mmns( std::size_t w, std::size_t l );
mpz_class count_mmns_of_size( std::size_t n );

/// Single-pass enumeration of N_{w,l} in lexicographic matrix order
/// (row-major, first entry most significant).
class MmnEnumeration
{
public:
  MmnEnumeration( std::size_t w, std::size_t l, Caps const& caps = default_caps() );

  class iterator
  {
  public:
    using value_type = Mmn;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator( MmnEnumeration const* owner, std::uint64_t index ) : owner_( owner ), index_( index ) {}

    Mmn operator*() const { return owner_->at( index_ ); }
    iterator& operator++()
    {
      ++index_;
      return *this;
    }
    iterator operator++( int )
    {
      auto copy = *this;
      ++index_;
      return copy;
    }
    bool operator==( iterator const& other ) const { return index_ == other.index_; }

  private:
    MmnEnumeration const* owner_ = nullptr;
    std::uint64_t index_ = 0;
  };

  iterator begin() const { return { this, 0 }; }
  iterator end() const { return { this, count_ }; }
  std::uint64_t count() const noexcept { return count_; }

  /// The index-th network in lexicographic order.
  Mmn at( std::uint64_t index ) const;

private:
  std::size_t w_;
  std::size_t l_;
  std::uint64_t count_;
};

inline MmnEnumeration enumerate_mmns( std::size_t w, std::size_t l, Caps const& caps = default_caps() )
{
  return MmnEnumeration( w, l, caps );
}

/// All MMNs of size n: widths in increasing divisor order, each class in lexicographic order.
std::vector<Mmn> all_mmns_of_size( std::size_t n, Caps const& caps = default_caps() );

GraphRealization graph_realization( Mmn const& n );

/// Matchstick inclusion order; both networks must share w, l >= 2.
bool leq_M( Mmn const& a, Mmn const& b );

} // namespace mmnrel
