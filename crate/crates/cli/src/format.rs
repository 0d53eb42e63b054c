//! On-disk JSON formats.
//!
//! Both files are single JSON documents with exactly two fields. The
//! `universe` array fixes the bit layout: element `i` is bit `i` of every
//! bitmask. Tables are arrays of plain decimal bitmasks indexed by subset
//! bitmask, so files compare byte for byte across implementations.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use outcast_core::choice::{ChoiceError, ChoiceFunction};
use outcast_core::order::{HyperOrder, OrderError};
use outcast_core::subset::{SubsetId, Universe, UniverseError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{0}")]
    Universe(#[from] UniverseError),
    #[error("{0}")]
    Choice(#[from] ChoiceError),
    #[error("{0}")]
    Order(#[from] OrderError),
}

/// Serialized choice function: `choice[A] = f(A)` as a bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChoiceFunctionFile {
    pub universe: Vec<String>,
    pub choice: Vec<u32>,
}

impl ChoiceFunctionFile {
    pub fn from_function(f: &ChoiceFunction) -> Self {
        Self {
            universe: f.universe().names().to_vec(),
            choice: f.table().iter().map(|s| s.bits()).collect(),
        }
    }

    pub fn to_function(&self) -> Result<ChoiceFunction, FormatError> {
        let universe = Universe::new(self.universe.clone())?;
        let table = self.choice.iter().copied().map(SubsetId::new).collect();
        Ok(ChoiceFunction::new(universe, table)?)
    }
}

/// Serialized hyper-order: `ranks[A]` is the position of subset `A`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderFile {
    pub universe: Vec<String>,
    pub ranks: Vec<u32>,
}

impl OrderFile {
    pub fn from_order(order: &HyperOrder) -> Self {
        Self {
            universe: order.universe().names().to_vec(),
            ranks: order.ranks().to_vec(),
        }
    }

    pub fn to_order(&self) -> Result<HyperOrder, FormatError> {
        let universe = Universe::new(self.universe.clone())?;
        Ok(HyperOrder::new(universe, self.ranks.clone())?)
    }
}

/// Canonical serialization: compact JSON plus a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("file types serialize infallibly");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn choice_file_round_trips_through_the_core_type() {
        let file = ChoiceFunctionFile {
            universe: vec!["a".into(), "b".into()],
            choice: vec![0, 1, 0, 1],
        };
        let f = file.to_function().unwrap();
        assert_eq!(ChoiceFunctionFile::from_function(&f), file);
    }

    #[test]
    fn order_file_round_trips_through_the_core_type() {
        let file = OrderFile {
            universe: vec!["a".into(), "b".into()],
            ranks: vec![1, 3, 0, 2],
        };
        let order = file.to_order().unwrap();
        assert_eq!(OrderFile::from_order(&order), file);
    }

    #[test]
    fn serialization_is_stable() {
        let file = OrderFile {
            universe: vec!["a".into(), "b".into()],
            ranks: vec![1, 3, 0, 2],
        };
        assert_eq!(
            to_json(&file),
            "{\"universe\":[\"a\",\"b\"],\"ranks\":[1,3,0,2]}\n"
        );
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"universe":["a"],"choice":[0,1],"extra":1}"#;
        assert!(serde_json::from_str::<ChoiceFunctionFile>(text).is_err());
    }

    #[test]
    fn choice_condition_is_enforced_on_load() {
        let file = ChoiceFunctionFile {
            universe: vec!["a".into()],
            choice: vec![0, 2],
        };
        assert!(matches!(
            file.to_function(),
            Err(FormatError::Choice(ChoiceError::ChoiceViolation { .. }))
        ));
    }

    #[test]
    fn permutation_is_enforced_on_load() {
        let file = OrderFile {
            universe: vec!["a".into(), "b".into()],
            ranks: vec![1, 1, 0, 2],
        };
        assert!(matches!(
            file.to_order(),
            Err(FormatError::Order(OrderError::DuplicateRank { .. }))
        ));
    }

    proptest! {
        #[test]
        fn parse_of_serialize_is_identity(n in 0usize..=6, seed: u64) {
            let order = outcast_core::oracle::random_order(n, seed).unwrap();
            let order_file = OrderFile::from_order(&order);
            let text = to_json(&order_file);
            prop_assert_eq!(serde_json::from_str::<OrderFile>(&text).unwrap(), order_file);
            prop_assert_eq!(text.clone(), to_json(&serde_json::from_str::<OrderFile>(&text).unwrap()));

            let choice_file = ChoiceFunctionFile::from_function(&order.induced_choice());
            let text = to_json(&choice_file);
            prop_assert_eq!(serde_json::from_str::<ChoiceFunctionFile>(&text).unwrap(), choice_file);
        }
    }
}
