import tensorflow as tf
from .models import attention_scores, project

sess = tf.Session()
for step in range(20):
    sess.run(attention_scores())
for step in range(20):
    sess.run(project(tf.constant([[float(step), 1.0]])))
