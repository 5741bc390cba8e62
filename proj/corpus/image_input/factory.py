import tensorflow as tf


def make_source():
    return tf.data.Dataset.range(10)


def f(x):
    return x


ds = make_source()
ds = ds.map(f)  # expect: MOB001, DPM001
ds = ds.batch(5)
