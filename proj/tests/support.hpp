#pragma once

#include "twistrep/extparams.hpp"

#include <memory>

namespace twistrep::testing {

// the delta0-fixed block at gamma = rho, g = rho_check
inline std::shared_ptr<const ExtBlock> block_at_rho(const DatumDescription& d) {
    RootDatum datum = build_datum(d);
    return make_ext_block(d, rho(datum), rho_check(datum));
}

}  // namespace twistrep::testing
