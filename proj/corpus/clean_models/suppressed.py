import tensorflow as tf


def f(x):
    return x


ds = tf.data.Dataset.range(4)
# dlperf: ignore[MOB001]
ds = ds.map(f)  # dlperf: ignore[DPM001]
ds = ds.batch(2)
a = tf.constant(1.0)
for i in range(3):
    tf.square(a)  # dlperf: ignore
