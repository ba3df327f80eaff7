#include <algorithm>

#include "pic27/coverage.hpp"
#include "pic27/errors.hpp"
#include "pic27/fermat.hpp"
#include "pic27/weyl.hpp"

namespace pic27 {

SylowLemmaReport verify_sylow_lemma() {
    PIC27_COVER("weyl.verify_sylow_lemma");
    SylowLemmaReport rep;

    // A type-A2 element that lives inside the embedded automorphism group,
    // so the two centralizers below concern the same element.
    const Embedding& emb = fermat_embedding();
    std::vector<FermatAut> a2 = a2_census();
    const auto& auts = fermat_aut_group();
    std::size_t a2_index =
        static_cast<std::size_t>(std::find(auts.begin(), auts.end(), a2.front()) - auts.begin());
    Perm beta = emb.images[a2_index];
    if (carter_type(beta) != CarterType::A2)
        throw structure_error("verify_sylow_lemma: embedded element is not of Carter type A2");

    const PermGroup& w = weyl_e6();
    rep.class_size = w.conjugacy_class(beta).size();

    PermGroup cent = w.centralizer(beta);
    rep.centralizer_order = cent.order();
    PermGroup sylow = cent.sylow3_unique();
    rep.sylow_order = sylow.order();
    rep.sylow_rank = sylow.is_elementary_abelian_3().value_or(-1);
    rep.sylow_normal = cent.normalizes(sylow);

    PermGroup aut_cent = emb.group.centralizer(beta);
    rep.aut_centralizer_order = aut_cent.order();
    PermGroup aut_sylow = aut_cent.sylow3_unique();
    rep.aut_sylow_order = aut_sylow.order();

    rep.sylow_subgroups_coincide = sylow.elements() == aut_sylow.elements();
    return rep;
}

} // namespace pic27
