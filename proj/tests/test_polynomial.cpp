#include "mmnrel/polynomial.hpp"

#include <doctest.h>

using namespace mmnrel;

TEST_SUITE( "polynomial" )
{
  TEST_CASE( "arithmetic trims and multiplies exactly" )
  {
    Polynomial const a{ 1, 2, 3 };
    Polynomial const b{ -1, -2, -3 };
    CHECK( ( a + b ).is_zero() );
    CHECK( ( a + b ).degree() == -1 );
    CHECK( ( a * Polynomial{ 0, 1 } ) == Polynomial{ 0, 1, 2, 3 } );
    CHECK( ( Polynomial{ 1, 1 } * Polynomial{ 1, -1 } ) == Polynomial{ 1, 0, -1 } );
    CHECK( -a == b );
  }

  TEST_CASE( "compose, reflect and derivative" )
  {
    Polynomial const sq{ 0, 0, 1 };
    Polynomial const par{ 0, 2, -1 };
    CHECK( sq.compose( par ) == Polynomial{ 0, 0, 4, -4, 1 } );
    CHECK( par.compose( sq ) == Polynomial{ 0, 0, 2, 0, -1 } );
    CHECK( sq.reflect() == Polynomial{ 1, -2, 1 } );
    CHECK( sq.reflect().reflect() == sq );
    CHECK( Polynomial{ 5, 3, 0, 2 }.derivative() == Polynomial{ 3, 0, 6 } );
  }

  TEST_CASE( "evaluation and sign" )
  {
    Polynomial const f{ -1, 0, 4 };
    CHECK( f.evaluate( mpq_class( 1, 2 ) ) == 0 );
    CHECK( f.sign_at( mpq_class( 1, 2 ) ) == 0 );
    CHECK( f.sign_at( mpq_class( 1, 3 ) ) < 0 );
    CHECK( f.sign_at( mpq_class( 2, 3 ) ) > 0 );
    CHECK( Polynomial{}.sign_at( mpq_class( 1, 5 ) ) == 0 );
  }

  TEST_CASE( "stripping roots at 0 and 1" )
  {
    std::size_t k = 0;
    Polynomial const f = Polynomial{ 0, 0, 3 } * Polynomial{ 1, -1 } * Polynomial{ 1, -1 } * Polynomial{ 2, 1 };
    auto const g = f.strip_root_at_zero( &k );
    CHECK( k == 2 );
    auto const h = g.strip_root_at_one( &k );
    CHECK( k == 2 );
    CHECK( h == Polynomial{ 6, 3 } );
  }

  TEST_CASE( "gcd, square-free part and exact division" )
  {
    Polynomial const a = Polynomial{ 1, -3 } * Polynomial{ 1, -3 } * Polynomial{ 2, 5 };
    Polynomial const b = Polynomial{ 1, -3 } * Polynomial{ 7, 1, 1 };
    CHECK( gcd( a, b ) == Polynomial{ -1, 3 } );
    CHECK( square_free_part( a ) == ( Polynomial{ -1, 3 } * Polynomial{ 2, 5 } ).primitive_part() );
    CHECK( exact_divide( a, Polynomial{ 2, 5 } ) == Polynomial{ 1, -3 } * Polynomial{ 1, -3 } );
    CHECK_THROWS_AS( exact_divide( a, Polynomial{ 1, 1 } ), std::domain_error );
    CHECK( gcd( Polynomial{ 1, 1 }, Polynomial{ 2, 1 } ) == Polynomial{ 1 } );
  }

  TEST_CASE( "content, primitive part and binomials" )
  {
    Polynomial const f{ -6, 4, -2 };
    CHECK( f.content() == 2 );
    CHECK( f.primitive_part() == Polynomial{ 3, -2, 1 } );
    CHECK( binomial( 64, 32 ) == mpz_class( "1832624140942590534" ) );
    CHECK( binomial( 5, 7 ) == 0 );
  }
}
