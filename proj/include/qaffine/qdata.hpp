#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qaffine/affine_type.hpp"
#include "qaffine/finite_roots.hpp"

namespace qaffine {

struct QViolation {
    int condition = 0;  // 1, 2 of the height-function definition; 3 for the extra orbit condition
    int i = 0;
    int j = 0;
    std::string message;
};

struct PsiValue {
    RootVec beta;  // positive root
    int m = 0;
    bool operator==(const PsiValue&) const = default;
};

struct IQEntry {
    int node = 0;  // node of the finite diagram
    int p = 0;
    bool operator==(const IQEntry&) const = default;
};

// (Delta_fin, rho, xi) together with the derived Coxeter-type element and gamma^Q.
class QDatum {
public:
    // order: explicit tau ordering of orbit representatives; empty means by height, ties ascending.
    QDatum(FinType fin, DiagramAutomorphism rho, std::vector<int> xi, std::vector<int> pi, bool is_default,
           std::vector<int> order = {});

    const FinRootSystem& fin() const { return fin_; }
    const DiagramAutomorphism& rho() const { return rho_; }
    int ord() const { return ord_; }
    int xi(int i) const { return xi_.at(i - 1); }
    const std::vector<int>& heights() const { return xi_; }
    int d(int i) const { return d_.at(i - 1); }
    int pi(int i) const { return pi_.at(i - 1); }
    bool is_default() const { return is_default_; }
    bool is_valid() const { return violations_.empty(); }
    const std::vector<QViolation>& violations() const { return violations_; }

    const Word& tau() const { return tau_; }
    const RootVec& gamma(int i) const { return gamma_.at(i - 1); }
    RootVec tau_power(int e, const RootVec& beta) const;

    // nullopt when (i, p) is not in hat I_Q
    std::optional<PsiValue> psi(int i, int p) const;
    // psi^{-1}(Delta^+ x {0}), one entry per positive root in root-enumeration order
    const std::vector<IQEntry>& iq() const { return iq_; }
    IQEntry psi_inverse(const RootVec& beta) const;

private:
    FinRootSystem fin_;
    DiagramAutomorphism rho_;
    int ord_ = 1;
    std::vector<int> xi_;
    std::vector<int> d_;
    std::vector<int> pi_;
    bool is_default_ = true;
    std::vector<QViolation> violations_;
    Word tau_;
    IntMatrix tau_mat_;
    IntMatrix tau_inv_;
    std::vector<RootVec> gamma_;
    std::vector<IQEntry> iq_;
};

std::vector<QViolation> validate_qdatum(const FinRootSystem& fin, const DiagramAutomorphism& rho,
                                        const std::vector<int>& xi);

QDatum default_qdatum(const AffineData& d);
// ADE only: a user height function on the g_fin diagram
QDatum custom_ade_qdatum(const AffineData& d, std::vector<int> xi, std::vector<int> order = {});

Word tau_q(const QDatum& q);
PsiValue psi_q(const QDatum& q, int i, int p);  // throws NotInHatIQ

// involution i -> i* of the finite diagram induced by -w_0
int fin_involution(FinType t, int i);

// the interval description of I_Q
std::vector<IQEntry> i_q_interval(const QDatum& q, const AffineData& d);

// epsilon(i, p); for twisted types this lands in the untwisted g_fin^(1) and must be twisted afterwards
SigmaPoint esig(const AffineData& d, const QDatum& q, int i, int p);
SigmaPoint twist_star(const AffineData& d, SigmaPoint untwisted);
SigmaPoint twist_dagger(SigmaPoint untwisted);

SigmaPoint phi_q(const QDatum& q, const AffineData& d, const RootVec& beta);

struct SigmaQEntry {
    SigmaPoint point;
    RootVec beta;
    IQEntry source;
};
std::vector<SigmaQEntry> sigma_q(const QDatum& q, const AffineData& d);

bool sigma0_contains(const AffineData& d, SigmaPoint p);

}  // namespace qaffine
