#ifndef WITTKIT_LINALG_HPP
#define WITTKIT_LINALG_HPP

#include <optional>
#include <vector>

#include <wittkit/ring.hpp>
#include <wittkit/unipoly.hpp>

namespace wittkit
{

using Matrix = std::vector<std::vector<Elem>>;

// Dense linear algebra over a field.
std::size_t rank(Matrix a);
Elem determinant(Matrix a);
// Some solution of A x = b, or nullopt if inconsistent.
std::optional<std::vector<Elem>> solve(Matrix a, std::vector<Elem> b);
// det(x I - M), via reduction to Hessenberg form.
UniPoly charpoly(const Matrix &m, const Ring &k);

// Finite extensions L/k handled here: L == k, L = k[θ]/(g) a simple
// extension, and F_q over its prime field.
bool is_extension_of(const Ring &L, const Ring &k);
std::size_t extension_degree(const Ring &L, const Ring &k);
// Coordinates of a in the power basis of L/k, and back.
std::vector<Elem> coordinates(const Elem &a, const Ring &k);
Elem from_coordinates(const Ring &L, const std::vector<Elem> &c);
Elem basis_element(const Ring &L, std::size_t i);
// Matrix of multiplication by a on the power basis (columns = images).
Matrix multiplication_matrix(const Elem &a, const Ring &k);
UniPoly field_charpoly(const Elem &a, const Ring &k);
Elem field_trace(const Elem &a, const Ring &k);
Elem field_norm(const Elem &a, const Ring &k);
// Throws DomainError for inseparable simple extensions.
void require_separable(const Ring &L, const Ring &k);

} // namespace wittkit

#endif
