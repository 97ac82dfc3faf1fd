//! Comodules of `B(E)` and free Yetter–Drinfeld modules.

mod boxpower;
mod comodule;
mod yd;

pub use boxpower::{bar_differential, bar_differential_is_colinear, coaction_closed, coaction_iterated};
pub use comodule::{
    delta_map, evaluation_map, intertwiner_space, phi_map, require_colinear, Comodule, ComoduleMorphism,
};
pub use yd::{adjunction_lift, phi_v1, phi_v2, FreeYDModule, YdCoaction, YdElement, YdMap, YdReport};
