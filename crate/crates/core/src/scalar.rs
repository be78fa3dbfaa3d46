use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::Signed;

/// Exact signed integer scalar usable by the linear-algebra kernels.
///
/// Implemented for every machine integer and for `BigInt`. Fixed-width
/// types are convenient for tests and small experiments; anything that
/// feeds the ring or report layers uses `BigInt`.
pub trait IntScalar:
    Integer + Signed + Clone + Debug + Display + Hash + From<i32> + Send + Sync + 'static
{
}

impl<T> IntScalar for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + From<i32> + Send + Sync + 'static
{
}
