import tensorflow as tf


def load(x):
    return x


def normalize(x):
    return x


ds = tf.data.Dataset.from_tensor_slices([0, 1, 2, 3])
ds = ds.map(load)  # expect: MOB001, DPM001
ds = ds.map(normalize, num_parallel_calls=2)  # expect: MOB001
ds = ds.batch(2)
