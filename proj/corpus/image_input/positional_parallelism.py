import tensorflow as tf


def parse(x):
    return x


ds = tf.data.Dataset.range(8)
ds = ds.map(parse, 4)  # expect: MOB001
ds = ds.batch(4)
