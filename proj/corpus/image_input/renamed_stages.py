import tensorflow as tf


def parse(x):
    return x


raw = tf.data.Dataset.list_files("/data/*.png")
parsed = raw.map(parse)  # expect: MOB001, DPM001
batched = parsed.batch(8)
