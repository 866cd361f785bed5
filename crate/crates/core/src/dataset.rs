use crate::error::{Error, Result};

/// A searchable value.
pub type Element = i64;

/// An immutable sequence of elements plus a sortedness flag.
///
/// The flag is only ever set after a one-pass check (or by a generator that
/// produces ascending output), so `is_sorted() == true` guarantees
/// `items[k] <= items[k + 1]` for every `k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Dataset {
    items: Vec<Element>,
    sorted: bool,
}

impl Dataset {
    /// Wraps `items` without asserting any order.
    pub fn new(items: Vec<Element>) -> Self {
        Dataset { items, sorted: false }
    }

    /// Wraps `items` and flags them as sorted after verifying non-decreasing
    /// order.
    pub fn assert_sorted(items: Vec<Element>) -> Result<Self> {
        check_sorted(&items)?;
        Ok(Dataset { items, sorted: true })
    }

    /// Caller guarantees `items` is non-decreasing.
    pub(crate) fn sorted_unchecked(items: Vec<Element>) -> Self {
        debug_assert!(check_sorted(&items).is_ok());
        Dataset { items, sorted: true }
    }

    pub fn items(&self) -> &[Element] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn is_sorted(&self) -> bool {
        self.sorted
    }

    pub fn into_items(self) -> Vec<Element> {
        self.items
    }
}

impl From<Vec<Element>> for Dataset {
    fn from(items: Vec<Element>) -> Self {
        Dataset::new(items)
    }
}

/// One pass over `items`; reports the first index that breaks ascending order.
pub(crate) fn check_sorted(items: &[Element]) -> Result<()> {
    match items.windows(2).position(|w| w[0] > w[1]) {
        Some(k) => Err(Error::NotSorted { index: k + 1 }),
        None => Ok(()),
    }
}
