import tensorflow as tf


def parse(x):
    return x


files = ["a.tfrecord", "b.tfrecord"]
dataset = tf.data.TFRecordDataset(files).map(parse).batch(16)  # expect: MOB001, DPM001
