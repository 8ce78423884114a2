/*
   Copyright 2026 The krs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "krs/module.hpp"

#include <algorithm>
#include <sstream>

#include "krs/random.hpp"

namespace krs {

// ---- RightModule ---------------------------------------------------------

RightModule::RightModule(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
    if (action_.size() != algebra_->dim()) {
        throw Error(ErrorCode::DimensionMismatch, "one action matrix per algebra basis vector is required");
    }
    for (const auto& a : action_) {
        if (a.rows() != dim_ || a.cols() != dim_) {
            throw Error(ErrorCode::DimensionMismatch, "action matrices must be dim x dim");
        }
        if (!(a.field() == algebra_->field())) throw Error(ErrorCode::FieldMismatch, "action over another field");
    }
}

RightModule RightModule::zero(AlgebraPtr algebra) {
    const auto& f = algebra->field();
    std::vector<Matrix> action(algebra->dim(), Matrix(f, 0, 0));
    return RightModule(std::move(algebra), 0, std::move(action));
}

Matrix RightModule::act(const AlgebraElement& a) const {
    if (!same_algebra(a.algebra(), algebra_)) throw Error(ErrorCode::AlgebraMismatch, "element of another algebra");
    Matrix out(field(), dim_, dim_);
    for (std::size_t i = 0; i < action_.size(); ++i) out.add_scaled(action_[i], a.coeffs()[i]);
    return out;
}

ModulePtr make_module(RightModule m) { return std::make_shared<const RightModule>(std::move(m)); }

bool same_module(const ModulePtr& a, const ModulePtr& b) noexcept {
    if (a == b) return true;
    return a && b && *a == *b;
}

// ---- ModuleMorphism ------------------------------------------------------

ModuleMorphism::ModuleMorphism(ModulePtr source, ModulePtr target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (!same_algebra(source_->algebra(), target_->algebra())) {
        throw Error(ErrorCode::AlgebraMismatch, "morphism between modules over different algebras");
    }
    if (matrix_.rows() != source_->dim() || matrix_.cols() != target_->dim()) {
        throw Error(ErrorCode::DimensionMismatch, "morphism matrix must be dim(source) x dim(target)");
    }
}

ModuleMorphism ModuleMorphism::identity(const ModulePtr& m) {
    return ModuleMorphism(m, m, Matrix::identity(m->field(), m->dim()));
}

ModuleMorphism ModuleMorphism::zero(const ModulePtr& source, const ModulePtr& target) {
    return ModuleMorphism(source, target, Matrix(source->field(), source->dim(), target->dim()));
}

bool ModuleMorphism::intertwines() const {
    for (std::size_t i = 0; i < source_->action().size(); ++i) {
        if (!(source_->action(i) * matrix_ == matrix_ * target_->action(i))) return false;
    }
    return true;
}

ModuleMorphism ModuleMorphism::scaled(Residue c) const { return ModuleMorphism(source_, target_, matrix_.scaled(c)); }

ModuleMorphism operator+(const ModuleMorphism& a, const ModuleMorphism& b) {
    if (!same_module(a.source_, b.source_) || !same_module(a.target_, b.target_)) {
        throw Error(ErrorCode::DimensionMismatch, "sum of morphisms with different endpoints");
    }
    return ModuleMorphism(a.source_, a.target_, a.matrix_ + b.matrix_);
}

ModuleMorphism operator-(const ModuleMorphism& a, const ModuleMorphism& b) {
    if (!same_module(a.source_, b.source_) || !same_module(a.target_, b.target_)) {
        throw Error(ErrorCode::DimensionMismatch, "difference of morphisms with different endpoints");
    }
    return ModuleMorphism(a.source_, a.target_, a.matrix_ - b.matrix_);
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
    if (!same_module(f.target(), g.source())) {
        throw Error(ErrorCode::DimensionMismatch, "compose: target of f is not the source of g");
    }
    return ModuleMorphism(f.source(), g.target(), f.matrix() * g.matrix());
}

// ---- validation ----------------------------------------------------------

std::string ModuleValidation::describe() const {
    if (ok()) return "ok";
    std::ostringstream os;
    if (!shape_ok) os << "action matrices have the wrong shape\n";
    if (!unit_ok) os << "the unit does not act as the identity\n";
    for (const auto& [i, j] : multiplicativity) {
        os << "rho(b_" << i << ") rho(b_" << j << ") != rho(b_" << i << " b_" << j << ")\n";
    }
    return os.str();
}

ModuleValidation validate_module(const RightModule& m) {
    ModuleValidation report;
    const auto& a = *m.algebra();
    if (m.action().size() != a.dim()) {
        report.shape_ok = false;
        return report;
    }
    const auto& f = a.field();
    Matrix unit_action(f, m.dim(), m.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) unit_action.add_scaled(m.action(i), a.unit()[i]);
    report.unit_ok = unit_action.is_identity();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Matrix expected(f, m.dim(), m.dim());
            for (const auto& t : a.product_terms(i, j)) expected.add_scaled(m.action(t.index), t.coeff);
            if (!(m.action(i) * m.action(j) == expected)) report.multiplicativity.emplace_back(i, j);
        }
    }
    return report;
}

// ---- Hom spaces ------------------------------------------------------------

HomSpace::HomSpace(ModulePtr source, ModulePtr target)
    : source_(std::move(source)), target_(std::move(target)),
      flat_{Matrix(source_->field(), 0, source_->dim() * target_->dim()), {}} {
    if (!same_algebra(source_->algebra(), target_->algebra())) {
        throw Error(ErrorCode::AlgebraMismatch, "Hom between modules over different algebras");
    }
    const auto& f = source_->field();
    const std::size_t m = source_->dim(), n = target_->dim();
    if (m == 0 || n == 0) return;
    const std::size_t unknowns = m * n;

    // Unknown F[s][c] sits at column s*n + c. Equation (r, c) of generator i:
    // sum_s rhoM[r][s] F[s][c] - sum_t F[r][t] rhoN[t][c] = 0.
    Matrix system(f, 0, unknowns);
    for (std::size_t i = 0; i < source_->action().size(); ++i) {
        const Matrix& rm = source_->action(i);
        const Matrix& rn = target_->action(i);
        Matrix block(f, unknowns, unknowns);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                auto eq = block.row(r * n + c);
                for (std::size_t s = 0; s < m; ++s) eq[s * n + c] = f.add(eq[s * n + c], rm(r, s));
                for (std::size_t t = 0; t < n; ++t) eq[r * n + t] = f.sub(eq[r * n + t], rn(t, c));
            }
        }
        system = row_space(vstack(system, block)).rows;
    }
    Matrix kernel = row_reduce(system).kernel_basis;
    flat_ = row_space(kernel);
    basis_.reserve(flat_.dim());
    for (std::size_t k = 0; k < flat_.dim(); ++k) {
        const auto row = flat_.rows.row(k);
        basis_.emplace_back(source_, target_, Matrix(f, m, n, Vector(row.begin(), row.end())));
    }
}

std::optional<Vector> HomSpace::coordinates(const Matrix& f) const {
    if (f.rows() != source_->dim() || f.cols() != target_->dim()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix shape vs Hom space");
    }
    if (basis_.empty()) {
        if (f.is_zero()) return Vector{};
        return std::nullopt;
    }
    return flat_.coordinates(f.data());
}

ModuleMorphism HomSpace::combination(std::span<const Residue> coords) const {
    if (coords.size() != basis_.size()) throw Error(ErrorCode::DimensionMismatch, "coordinate count vs Hom dim");
    Matrix out(source_->field(), source_->dim(), target_->dim());
    for (std::size_t k = 0; k < coords.size(); ++k) out.add_scaled(basis_[k].matrix(), coords[k]);
    return ModuleMorphism(source_, target_, std::move(out));
}

std::vector<ModuleMorphism> hom_basis(const ModulePtr& m, const ModulePtr& n) { return HomSpace(m, n).basis(); }

ModuleMorphism EndAlgebra::to_morphism(const AlgebraElement& x) const {
    if (!same_algebra(x.algebra(), algebra_)) throw Error(ErrorCode::AlgebraMismatch, "not an End element");
    return hom_.combination(x.coeffs());
}

AlgebraElement EndAlgebra::to_element(const ModuleMorphism& f) const {
    if (!same_module(f.source(), module()) || !same_module(f.target(), module())) {
        throw Error(ErrorCode::InvalidArgument, "morphism is not an endomorphism of this module");
    }
    auto c = hom_.coordinates(f.matrix());
    if (!c) throw Error(ErrorCode::InvalidArgument, "matrix does not intertwine");
    return AlgebraElement(algebra_, *std::move(c));
}

EndAlgebra end_algebra(const ModulePtr& m) {
    if (m->dim() == 0) throw Error(ErrorCode::ZeroModule, "End of the zero module is the zero ring");
    HomSpace hom(m, m);
    const std::size_t d = hom.dim();
    const auto& f = m->field();
    std::vector<Residue> constants(d * d * d, 0);
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            // basis_a o basis_b: apply b first.
            const Matrix prod = hom.basis()[b].matrix() * hom.basis()[a].matrix();
            auto c = hom.coordinates(prod);
            std::copy(c->begin(), c->end(), constants.begin() + static_cast<std::ptrdiff_t>((a * d + b) * d));
        }
    }
    auto unit = hom.coordinates(Matrix::identity(f, m->dim()));
    auto algebra = make_algebra(f, d, std::move(constants), *std::move(unit));
    return EndAlgebra(std::move(hom), std::move(algebra));
}

// ---- kernels, submodules, quotients --------------------------------------

namespace {

ModulePtr induced_module(const ModulePtr& ambient, const EchelonBasis& basis) {
    std::vector<Matrix> action;
    action.reserve(ambient->action().size());
    for (const auto& rho : ambient->action()) action.push_back(basis.coordinates_of_rows(basis.rows * rho));
    return make_module(RightModule(ambient->algebra(), basis.dim(), std::move(action)));
}

}  // namespace

KernelModule kernel_module(const ModuleMorphism& phi) {
    EchelonBasis basis = left_kernel(phi.matrix());
    ModulePtr k = induced_module(phi.source(), basis);
    return {k, ModuleMorphism(k, phi.source(), basis.rows)};
}

SubModule generated_submodule(const ModulePtr& m, const Matrix& generators) {
    EchelonBasis span = row_space(generators);
    for (;;) {
        Matrix grown = span.rows;
        for (const auto& rho : m->action()) grown = vstack(grown, span.rows * rho);
        EchelonBasis next = row_space(grown);
        if (next.dim() == span.dim()) break;
        span = std::move(next);
    }
    ModulePtr sub = induced_module(m, span);
    return {sub, ModuleMorphism(sub, m, span.rows)};
}

QuotientModule quotient_module(const ModulePtr& m, const Matrix& submodule_rows) {
    const auto& f = m->field();
    const std::size_t n = m->dim();
    EchelonBasis w = row_space(submodule_rows);
    for (const auto& rho : m->action()) {
        const Matrix image = w.rows * rho;
        for (std::size_t r = 0; r < image.rows(); ++r) {
            if (!w.coordinates(image.row(r))) throw Error(ErrorCode::InvalidModule, "span is not a submodule");
        }
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : w.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    // Reduce each standard basis vector modulo W and keep the free entries.
    Matrix proj(f, n, free_cols.size());
    for (std::size_t r = 0; r < n; ++r) {
        Vector v(n, 0);
        v[r] = 1;
        for (std::size_t i = 0; i < w.dim(); ++i) {
            if (w.pivots[i] == r) {
                for (std::size_t c = 0; c < n; ++c) v[c] = f.sub(v[c], w.rows(i, c));
            }
        }
        for (std::size_t a = 0; a < free_cols.size(); ++a) proj(r, a) = v[free_cols[a]];
    }
    std::vector<Matrix> action;
    for (const auto& rho : m->action()) {
        Matrix q(f, free_cols.size(), free_cols.size());
        for (std::size_t a = 0; a < free_cols.size(); ++a) {
            const Vector image = row_times(rho.row(free_cols[a]), proj);
            std::copy(image.begin(), image.end(), q.row(a).begin());
        }
        action.push_back(std::move(q));
    }
    ModulePtr quotient = make_module(RightModule(m->algebra(), free_cols.size(), std::move(action)));
    return {quotient, ModuleMorphism(m, quotient, std::move(proj))};
}

ModuleMorphism change_basis(const ModulePtr& m, const Matrix& p) {
    const Matrix p_inv = invert(p);
    std::vector<Matrix> action;
    for (const auto& rho : m->action()) action.push_back(p * rho * p_inv);
    ModulePtr conj = make_module(RightModule(m->algebra(), m->dim(), std::move(action)));
    return ModuleMorphism(conj, m, p);
}

// ---- direct sums and the regular module ----------------------------------

DirectSum direct_sum(const AlgebraPtr& algebra, std::span<const ModulePtr> parts) {
    const auto& f = algebra->field();
    for (const auto& part : parts) {
        if (!same_algebra(part->algebra(), algebra)) {
            throw Error(ErrorCode::AlgebraMismatch, "direct summand over another algebra");
        }
    }
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < algebra->dim(); ++i) {
        std::vector<Matrix> blocks;
        for (const auto& part : parts) blocks.push_back(part->action(i));
        action.push_back(block_diagonal(blocks, f));
    }
    std::size_t total = 0;
    for (const auto& part : parts) total += part->dim();
    ModulePtr sum = make_module(RightModule(algebra, total, std::move(action)));

    DirectSum out{sum, {}, {}};
    std::size_t offset = 0;
    for (const auto& part : parts) {
        Matrix inj(f, part->dim(), total);
        Matrix proj(f, total, part->dim());
        for (std::size_t k = 0; k < part->dim(); ++k) {
            inj(k, offset + k) = 1;
            proj(offset + k, k) = 1;
        }
        out.injections.emplace_back(part, sum, std::move(inj));
        out.projections.emplace_back(sum, part, std::move(proj));
        offset += part->dim();
    }
    return out;
}

ModulePtr regular_module(const AlgebraPtr& algebra) {
    const auto report = validate_algebra(*algebra);
    if (!report.ok()) throw Error(ErrorCode::InvalidAlgebra, report.describe());
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < algebra->dim(); ++i) {
        action.push_back(right_mul_matrix(AlgebraElement::basis(algebra, i)));
    }
    return make_module(RightModule(algebra, algebra->dim(), std::move(action)));
}

// ---- isomorphism search ----------------------------------------------------

namespace {

void require_same_algebra(const ModulePtr& m, const ModulePtr& n) {
    if (!same_algebra(m->algebra(), n->algebra())) {
        throw Error(ErrorCode::AlgebraMismatch, "modules over different algebras");
    }
}

std::optional<ModuleMorphism> invertible_composite(const HomSpace& forward, const HomSpace& backward) {
    for (const auto& f : forward.basis()) {
        if (f.is_isomorphism()) return f;
    }
    for (const auto& f : forward.basis()) {
        for (const auto& g : backward.basis()) {
            if (rank(f.matrix() * g.matrix()) == f.source()->dim()) return f;
        }
    }
    return std::nullopt;
}

}  // namespace

IsoSearch find_isomorphism(const ModulePtr& m, const ModulePtr& n, const IsoSearchOptions& options) {
    require_same_algebra(m, n);
    if (same_module(m, n)) return {IsoStatus::Found, ModuleMorphism(m, n, Matrix::identity(m->field(), m->dim()))};
    if (m->dim() != n->dim()) return {IsoStatus::NotIsomorphic, std::nullopt};
    if (m->dim() == 0) return {IsoStatus::Found, ModuleMorphism::zero(m, n)};
    HomSpace forward(m, n);
    if (forward.dim() == 0) return {IsoStatus::NotIsomorphic, std::nullopt};
    HomSpace backward(n, m);
    if (backward.dim() == 0) return {IsoStatus::NotIsomorphic, std::nullopt};
    if (auto f = invertible_composite(forward, backward)) return {IsoStatus::Found, std::move(f)};

    const auto& field = m->field();
    const std::uint64_t p = field.characteristic();
    Rng rng(options.seed);
    Vector coords(forward.dim());
    for (std::uint32_t t = 0; t < options.trials; ++t) {
        for (auto& c : coords) c = static_cast<Residue>(rng.below(p));
        auto candidate = forward.combination(coords);
        if (candidate.is_isomorphism()) return {IsoStatus::Found, std::move(candidate)};
    }

    std::uint64_t space = 1;
    bool within = true;
    for (std::size_t k = 0; k < forward.dim() && within; ++k) {
        if (space > options.enumeration_budget / p) within = false;
        space *= p;
    }
    if (!within || space > options.enumeration_budget) return {IsoStatus::Inconclusive, std::nullopt};

    // Odometer over all coefficient vectors, updating the matrix in place.
    std::fill(coords.begin(), coords.end(), 0);
    Matrix current(field, m->dim(), n->dim());
    const auto top = static_cast<Residue>(p - 1);
    for (;;) {
        std::size_t k = 0;
        for (; k < coords.size(); ++k) {
            current.add_scaled(forward.basis()[k].matrix(), 1);
            if (coords[k] < top) {
                ++coords[k];
                break;
            }
            coords[k] = 0;  // p additions wrap back to 0
        }
        if (k == coords.size()) break;
        if (rank(current) == m->dim()) return {IsoStatus::Found, ModuleMorphism(m, n, current)};
    }
    return {IsoStatus::NotIsomorphic, std::nullopt};
}

IsoSearch find_isomorphism_local(const ModulePtr& m, const ModulePtr& n) {
    require_same_algebra(m, n);
    if (same_module(m, n)) return {IsoStatus::Found, ModuleMorphism(m, n, Matrix::identity(m->field(), m->dim()))};
    if (m->dim() != n->dim()) return {IsoStatus::NotIsomorphic, std::nullopt};
    if (m->dim() == 0) return {IsoStatus::Found, ModuleMorphism::zero(m, n)};
    HomSpace forward(m, n);
    if (forward.dim() == 0) return {IsoStatus::NotIsomorphic, std::nullopt};
    HomSpace backward(n, m);
    if (auto f = invertible_composite(forward, backward)) return {IsoStatus::Found, std::move(f)};
    return {IsoStatus::NotIsomorphic, std::nullopt};
}

// ---- Phi: End(eA) -> eAe ---------------------------------------------------

KernelModule right_ideal(const AlgebraPtr& algebra, const AlgebraElement& e) {
    if (!same_algebra(e.algebra(), algebra)) throw Error(ErrorCode::AlgebraMismatch, "element of another algebra");
    const ModulePtr reg = regular_module(algebra);
    const ModuleMorphism left_e(reg, reg, left_mul_matrix(e).transpose());
    return kernel_module(ModuleMorphism::identity(reg) - left_e);
}

PhiReport phi_corner_iso(const AlgebraPtr& algebra, const AlgebraElement& e) {
    if (!same_algebra(e.algebra(), algebra)) throw Error(ErrorCode::AlgebraMismatch, "idempotent of another algebra");
    if (!e.is_idempotent()) throw Error(ErrorCode::NotIdempotent, "Phi needs e*e = e");
    if (e.is_zero()) throw Error(ErrorCode::ZeroIdempotent, "Phi needs e != 0");
    const auto& f = algebra->field();

    const KernelModule summand = right_ideal(algebra, e);
    const EchelonBasis summand_basis = row_space(summand.inclusion.matrix());
    const auto e_in_summand = summand_basis.coordinates(e.coeffs());

    const EndAlgebra end = end_algebra(summand.kernel);
    const CornerAlgebra corner = corner_algebra(algebra, e);

    PhiReport report;
    report.end_dim = end.algebra()->dim();
    report.corner_dim = corner.algebra()->dim();
    Matrix phi(f, report.end_dim, report.corner_dim);
    for (std::size_t k = 0; k < report.end_dim; ++k) {
        const Vector image = row_times(row_times(*e_in_summand, end.basis()[k].matrix()), summand.inclusion.matrix());
        const AlgebraElement value = corner.project(AlgebraElement(algebra, image));
        std::copy(value.coeffs().begin(), value.coeffs().end(), phi.row(k).begin());
    }
    report.bijective = report.end_dim == report.corner_dim && rank(phi) == report.end_dim;

    report.multiplicative = true;
    const auto& end_alg = *end.algebra();
    for (std::size_t a = 0; a < report.end_dim && report.multiplicative; ++a) {
        for (std::size_t b = 0; b < report.end_dim; ++b) {
            Vector prod_coords(report.end_dim);
            for (std::size_t k = 0; k < report.end_dim; ++k) prod_coords[k] = end_alg.constant(a, b, k);
            const Vector lhs = row_times(prod_coords, phi);
            const Vector rhs = corner.algebra()->multiply(phi.row(a), phi.row(b));
            if (lhs != rhs) {
                report.multiplicative = false;
                break;
            }
        }
    }
    report.unital = row_times(end_alg.unit(), phi) == corner.algebra()->unit();
    report.phi = std::move(phi);
    return report;
}

// ---- bi-chains -------------------------------------------------------------

std::optional<std::size_t> bichain_stabilize(const BiChain& chain) {
    std::size_t last_non_iso = 0;
    bool any_non_iso = false;
    for (std::size_t n = 0; n < chain.size(); ++n) {
        const auto& [alpha, beta] = chain[n];
        if (!same_module(alpha.target(), beta.source()) || !same_module(beta.target(), alpha.source())) {
            throw Error(ErrorCode::InvalidChain, "step " + std::to_string(n) + " endpoints do not match");
        }
        if (n + 1 < chain.size() && !same_module(alpha.target(), chain[n + 1].alpha.source())) {
            throw Error(ErrorCode::InvalidChain, "step " + std::to_string(n) + " does not chain to the next");
        }
        if (!alpha.intertwines() || !beta.intertwines()) {
            throw Error(ErrorCode::InvalidChain, "step " + std::to_string(n) + " is not a module map");
        }
        if (!alpha.is_surjective()) throw Error(ErrorCode::InvalidChain, "alpha_" + std::to_string(n) + " is not epic");
        if (!beta.is_injective()) throw Error(ErrorCode::InvalidChain, "beta_" + std::to_string(n) + " is not monic");
        if (alpha.source()->dim() != alpha.target()->dim()) {
            last_non_iso = n;
            any_non_iso = true;
        }
    }
    if (!any_non_iso) return 0;
    if (last_non_iso + 1 == chain.size()) return std::nullopt;
    return last_non_iso + 1;
}

}  // namespace krs
